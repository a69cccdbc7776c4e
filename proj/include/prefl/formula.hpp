#pragma once

#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace prefl {

enum class Connective { Atom, Top, Bot, Not, And, Or, Implies, Iff };

/// Immutable propositional formula. Subtrees are shared, so copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula equivalence(Formula left, Formula right);
  static Formula binary(Connective op, Formula left, Formula right);

  Connective kind() const;
  bool is_binary() const;
  /// Atom name; empty for every other kind.
  const std::string& name() const;
  /// Operand of Not, or the left operand of a binary connective.
  const Formula& left() const;
  const Formula& right() const;

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
};

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }

/// Atom names occurring in `f`.
void collect_atoms(const Formula& f, std::set<std::string>& out);

/// Renders with the minimum parentheses needed to parse back to the same
/// tree: `!` binds tightest, then `&`, `|`, `->` (right-associative) and
/// `<->`.
std::string to_string(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Ordered list of formulas. Order does not affect semantics.
struct Theory {
  std::vector<Formula> formulas;

  Theory() = default;
  Theory(std::initializer_list<Formula> fs) : formulas(fs) {}
  explicit Theory(std::vector<Formula> fs) : formulas(std::move(fs)) {}

  std::size_t size() const { return formulas.size(); }
  bool empty() const { return formulas.empty(); }
  void add(Formula f) { formulas.push_back(std::move(f)); }

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Concatenation of two theories; the models are the intersection.
Theory operator+(Theory a, const Theory& b);

void collect_atoms(const Theory& t, std::set<std::string>& out);

}  // namespace prefl
