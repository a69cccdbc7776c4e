#include "prefl/formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prefl {

namespace {

int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    default: return 5;
  }
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Implies: return " -> ";
    case Connective::Iff: return " <-> ";
    default: return "";
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  const int p = precedence(f.kind());
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Atom: out += f.name(); break;
    case Connective::Top: out += 'T'; break;
    case Connective::Bot: out += 'F'; break;
    case Connective::Not:
      out += '!';
      render(f.left(), 5, out);
      break;
    default: {
      const bool right_assoc = f.kind() == Connective::Implies;
      render(f.left(), right_assoc ? p + 1 : p, out);
      out += symbol(f.kind());
      render(f.right(), right_assoc ? p : p + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), {}}));
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Connective::Top, {}, {}}));
  return t;
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::Bot, {}, {}}));
  return f;
}

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Connective::Not, {}, {std::move(child)}}));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  switch (op) {
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
    case Connective::Iff:
      break;
    default:
      throw std::invalid_argument("not a binary connective");
  }
  return Formula(
      std::make_shared<const Node>(Node{op, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return binary(Connective::And, std::move(l), std::move(r));
}
Formula Formula::disjunction(Formula l, Formula r) {
  return binary(Connective::Or, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(Connective::Implies, std::move(l), std::move(r));
}
Formula Formula::equivalence(Formula l, Formula r) {
  return binary(Connective::Iff, std::move(l), std::move(r));
}

bool Formula::is_binary() const { return node_->children.size() == 2; }

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("formula has no operands");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) throw std::logic_error("formula has no right operand");
  return node_->children[1];
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->children == b.node_->children;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Connective::Atom) {
    out.insert(f.name());
    return;
  }
  if (f.kind() == Connective::Not) {
    collect_atoms(f.left(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

void collect_atoms(const Theory& t, std::set<std::string>& out) {
  for (const auto& f : t.formulas) collect_atoms(f, out);
}

std::string to_string(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

Theory operator+(Theory a, const Theory& b) {
  a.formulas.insert(a.formulas.end(), b.formulas.begin(), b.formulas.end());
  return a;
}

}  // namespace prefl
