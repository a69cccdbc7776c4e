#include "prefl/parser.hpp"

#include <cctype>
#include <optional>

#include "prefl/error.hpp"

namespace prefl {

namespace {

enum class Tok { Atom, Top, Bot, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Atom: return "atom";
    case Tok::Top: return "'T'";
    case Tok::Bot: return "'F'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, AtomScope scope, const SourcePos& at)
      : text_(text), scope_(scope), at_(at) {
    advance();
  }

  Formula parse() {
    Formula f = parse_iff();
    if (current_.kind != Tok::End) fail(current_.offset, "unexpected " + std::string(describe(current_.kind)));
    return f;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw ParseError(at_.source, at_.line, at_.column + offset, offset, message);
  }

  void advance() {
    std::size_t i = pos_;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i])) != 0) ++i;
    if (i >= text_.size()) {
      current_ = {Tok::End, text_.size(), {}};
      pos_ = i;
      return;
    }
    const char c = text_[i];
    auto single = [&](Tok k, std::size_t len) {
      current_ = {k, i, text_.substr(i, len)};
      pos_ = i + len;
    };
    switch (c) {
      case '!': return single(Tok::Not, 1);
      case '&': return single(Tok::And, 1);
      case '|': return single(Tok::Or, 1);
      case '(': return single(Tok::LParen, 1);
      case ')': return single(Tok::RParen, 1);
      case '-':
        if (text_.substr(i, 2) == "->") return single(Tok::Implies, 2);
        break;
      case '<':
        if (text_.substr(i, 3) == "<->") return single(Tok::Iff, 3);
        break;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i + 1;
      while (j < text_.size() && is_word_char(text_[j])) ++j;
      const std::string_view word = text_.substr(i, j - i);
      if (word == "T") return single(Tok::Top, 1);
      if (word == "F") return single(Tok::Bot, 1);
      if (std::islower(static_cast<unsigned char>(c)) != 0) return single(Tok::Atom, j - i);
      fail(i, "invalid identifier '" + std::string(word) + "'; atoms start with a lowercase letter");
    }
    fail(i, std::string("unexpected character '") + c + "'");
  }

  void expect(Tok k) {
    if (current_.kind != k) {
      fail(current_.offset, std::string("expected ") + describe(k) + ", found " + describe(current_.kind));
    }
    advance();
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (current_.kind == Tok::Iff) {
      advance();
      f = Formula::equivalence(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (current_.kind == Tok::Implies) {
      advance();
      return Formula::implication(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (current_.kind == Tok::Or) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (current_.kind == Tok::And) {
      advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token t = current_;
    switch (t.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(parse_unary());
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bot:
        advance();
        return Formula::bot();
      case Tok::Atom:
        check_atom(t);
        advance();
        return Formula::atom(std::string(t.text));
      default:
        fail(t.offset, std::string("expected formula, found ") + describe(t.kind));
    }
  }

  void check_atom(const Token& t) {
    if (scope_.alphabet != nullptr && !scope_.alphabet->contains(t.text)) {
      throw UnknownAtomError(at_.source, at_.line, at_.column + t.offset, t.offset,
                             std::string(t.text));
    }
    if (scope_.builder != nullptr) {
      if (scope_.builder->frozen() && !scope_.builder->contains(t.text)) {
        throw UnknownAtomError(at_.source, at_.line, at_.column + t.offset, t.offset,
                               std::string(t.text));
      }
      scope_.builder->add(t.text);
    }
  }

  std::string_view text_;
  AtomScope scope_;
  SourcePos at_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text, AtomScope scope, const SourcePos& at) {
  return Parser(text, scope, at).parse();
}

}  // namespace prefl
