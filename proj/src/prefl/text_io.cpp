#include "prefl/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "prefl/error.hpp"

namespace prefl {

namespace {

/// A significant line: comment stripped, surrounding blanks trimmed.
struct Line {
  std::string_view text;
  std::size_t number;
  std::size_t column;  // 1-based column of text[0]
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++number;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead])) != 0) ++lead;
    std::size_t len = line.size();
    while (len > lead && std::isspace(static_cast<unsigned char>(line[len - 1])) != 0) --len;
    if (len > lead) out.push_back(Line{line.substr(lead, len - lead), number, lead + 1});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

/// Token-level reader over one line, reporting errors at the current column.
class Cursor {
 public:
  Cursor(std::string_view source, const Line& line) : source_(source), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(std::string(source_), line_.number, line_.column + pos, pos, message);
  }

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  char peek() {
    skip_ws();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (line_.text.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  std::uint32_t read_index() {
    skip_ws();
    std::size_t end = pos_;
    while (end < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[end])) != 0) ++end;
    if (end == pos_) fail("expected a model index");
    if (end - pos_ > 9) fail("model index too large");
    const auto value = static_cast<std::uint32_t>(std::stoul(std::string(line_.text.substr(pos_, end - pos_))));
    pos_ = end;
    return value;
  }

  Copy read_copy() {
    const std::uint32_t model = read_index();
    if (pos_ >= line_.text.size() || line_.text[pos_] != ':') fail("expected ':' in copy 'model:tag'");
    ++pos_;
    if (pos_ >= line_.text.size() || std::isdigit(static_cast<unsigned char>(line_.text[pos_])) == 0) {
      fail("expected a copy tag");
    }
    return Copy{model, read_index()};
  }

  std::vector<std::uint32_t> read_set() {
    expect("{");
    std::vector<std::uint32_t> out;
    if (accept("}")) return out;
    while (true) {
      out.push_back(read_index());
      if (accept("}")) break;
      expect(",");
    }
    return out;
  }

  std::string_view rest() const { return line_.text.substr(pos_); }
  SourcePos position_of_rest() const {
    return SourcePos{std::string(source_), line_.number, line_.column + pos_};
  }

  void skip_ws() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_])) != 0) ++pos_;
  }

 private:
  std::string_view source_;
  Line line_;
  std::size_t pos_ = 0;
};

Formula parse_at(const Cursor& c, std::string_view text, std::size_t offset, AtomScope scope) {
  SourcePos at = c.position_of_rest();
  at.column += offset;
  return parse_formula(text, scope, at);
}

}  // namespace

Theory parse_theory(std::string_view text, std::string_view source, AtomScope scope) {
  Theory t;
  for (const auto& line : significant_lines(text)) {
    t.add(parse_formula(line.text, scope, SourcePos{std::string(source), line.number, line.column}));
  }
  return t;
}

PreferentialStructure parse_structure(std::string_view text, std::string_view source,
                                      std::size_t model_count) {
  const auto lines = significant_lines(text);
  if (lines.empty()) {
    throw ParseError(std::string(source), 1, 1, 0, "missing 'copies:' line");
  }
  std::vector<Copy> copies;
  {
    Cursor c(source, lines.front());
    c.expect("copies:");
    while (!c.at_end()) {
      const std::size_t at = c.pos();
      const Copy copy = c.read_copy();
      if (copy.model >= model_count) {
        c.fail_at(at, "model " + std::to_string(copy.model) + " outside the universe of " +
                          std::to_string(model_count) + " models");
      }
      if (std::find(copies.begin(), copies.end(), copy) != copies.end()) {
        c.fail_at(at, "duplicate copy " + to_string(copy));
      }
      copies.push_back(copy);
    }
  }
  std::vector<Preference> prefers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Cursor c(source, lines[i]);
    auto read_declared = [&] {
      c.skip_ws();
      const std::size_t at = c.pos();
      const Copy copy = c.read_copy();
      if (std::find(copies.begin(), copies.end(), copy) == copies.end()) {
        c.fail_at(at, "copy " + to_string(copy) + " is not declared");
      }
      return copy;
    };
    const Copy better = read_declared();
    c.expect("<");
    const Copy worse = read_declared();
    if (!c.at_end()) c.fail("unexpected trailing text");
    if (better == worse) c.fail_at(0, "a copy cannot be preferred to itself");
    prefers.push_back(Preference{better, worse});
  }
  return PreferentialStructure(model_count, std::move(copies), prefers);
}

std::string write_structure(const PreferentialStructure& s) {
  std::ostringstream out;
  out << "copies:";
  for (const auto& c : s.copies()) out << ' ' << to_string(c);
  out << '\n';
  for (const auto& p : s.prefers()) out << to_string(p.better) << " < " << to_string(p.worse) << '\n';
  return out.str();
}

SelectionFunction parse_selection(std::string_view text, std::string_view source) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(std::string(source), 1, 1, 0, "missing 'universe:' line");

  std::vector<std::uint32_t> universe;
  std::uint32_t largest = 0;
  {
    Cursor c(source, lines.front());
    c.expect("universe:");
    while (!c.at_end()) {
      const std::size_t at = c.pos();
      const auto m = c.read_index();
      if (std::find(universe.begin(), universe.end(), m) != universe.end()) {
        c.fail_at(at, "duplicate model " + std::to_string(m) + " in universe");
      }
      universe.push_back(m);
      largest = std::max(largest, m);
    }
  }

  struct Entry {
    std::vector<std::uint32_t> key;
    std::vector<std::uint32_t> value;
    const Line* line;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Cursor c(source, lines[i]);
    Entry e{c.read_set(), {}, &lines[i]};
    c.expect("->");
    e.value = c.read_set();
    if (!c.at_end()) c.fail("unexpected trailing text");
    for (auto m : e.key) {
      if (std::find(universe.begin(), universe.end(), m) == universe.end()) {
        c.fail_at(0, "key mentions model " + std::to_string(m) + " outside the universe");
      }
    }
    for (auto m : e.value) largest = std::max(largest, m);
    entries.push_back(std::move(e));
  }

  const std::size_t size = static_cast<std::size_t>(largest) + 1;
  SelectionFunction::Table table;
  for (const auto& e : entries) {
    ModelSet key = ModelSet::from_indices(size, e.key);
    if (table.contains(key)) {
      Cursor(source, *e.line).fail_at(0, "duplicate entry for " + key.to_string());
    }
    table.emplace(std::move(key), ModelSet::from_indices(size, e.value));
  }
  return SelectionFunction(ModelSet::from_indices(size, universe), std::move(table));
}

std::string write_selection(const SelectionFunction& sel) {
  std::ostringstream out;
  out << "universe:";
  sel.universe().for_each([&](Model m) { out << ' ' << m.index; });
  out << '\n';
  for (const auto& [x, mu] : sel.table()) out << x.to_string() << " -> " << mu.to_string() << '\n';
  return out.str();
}

DefaultsFile parse_defaults(std::string_view text, std::string_view source, AtomScope scope) {
  DefaultsFile file;
  for (const auto& line : significant_lines(text)) {
    Cursor c(source, line);
    if (!c.accept("default:")) {
      file.facts.add(
          parse_formula(line.text, scope, SourcePos{std::string(source), line.number, line.column}));
      continue;
    }
    const std::string_view body = c.rest();
    const auto arrow = body.find("=>");
    if (arrow == std::string_view::npos) c.fail("expected '=>' in default rule");
    Formula pre = parse_at(c, body.substr(0, arrow), 0, scope);
    Formula post = parse_at(c, body.substr(arrow + 2), arrow + 2, scope);
    file.rules.emplace_back(std::move(pre), std::move(post));
  }
  return file;
}

ObligationSet parse_obligations(std::string_view text, std::string_view source, AtomScope scope) {
  ObligationSet obs;
  for (const auto& line : significant_lines(text)) {
    Cursor c(source, line);
    c.expect("ought:");
    obs.obligations.push_back(parse_at(c, c.rest(), 0, scope));
  }
  return obs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace prefl
