#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prefl {

/// One valuation of an alphabet. Bit i of `index` is the truth value of the
/// atom at position i of the alphabet's sorted order.
struct Model {
  std::uint32_t index = 0;

  bool holds(std::size_t atom) const { return (index >> atom) & 1U; }

  friend auto operator<=>(const Model&, const Model&) = default;
};

/// True for names matching `[a-z][a-zA-Z0-9_]*`.
bool is_atom_name(std::string_view name);

/// A finite, sorted set of atom names, 1 to 16 atoms.
class Alphabet {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  explicit Alphabet(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Number of models, 2^size().
  std::size_t model_count() const { return std::size_t{1} << atoms_.size(); }

  /// Truth values in atom order, e.g. "101" for p, !q, r.
  std::string bits(Model m) const;
  /// Literal rendering in atom order, e.g. "p !q r".
  std::string render(Model m) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Collects atom names while formulas are being read. Once frozen, further
/// additions of unseen names are rejected.
class AlphabetBuilder {
 public:
  void add(std::string_view name);
  bool contains(std::string_view name) const;
  bool frozen() const { return frozen_; }
  const std::set<std::string, std::less<>>& names() const { return names_; }

  Alphabet freeze();

 private:
  std::set<std::string, std::less<>> names_;
  bool frozen_ = false;
};

}  // namespace prefl
