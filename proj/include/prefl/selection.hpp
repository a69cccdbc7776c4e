#pragma once

#include <map>
#include <vector>

#include "prefl/model_set.hpp"
#include "prefl/structure.hpp"

namespace prefl {

/// An explicitly tabulated choice function μ on subsets of a universe. The
/// table may be arbitrary so that violations of the μ laws stay
/// representable.
class SelectionFunction {
 public:
  using Table = std::map<ModelSet, ModelSet>;

  /// Throws std::invalid_argument if a key is not a subset of the universe
  /// or sizes disagree.
  SelectionFunction(ModelSet universe, Table table);

  const ModelSet& universe() const { return universe_; }
  const Table& table() const { return table_; }
  std::vector<ModelSet> domain() const;
  bool has(const ModelSet& x) const { return table_.contains(x); }
  /// Throws std::out_of_range for keys outside the domain.
  const ModelSet& at(const ModelSet& x) const;
  bool domain_is_powerset() const;

  friend bool operator==(const SelectionFunction&, const SelectionFunction&) = default;

 private:
  ModelSet universe_;
  Table table_;
};

/// Tabulates μ over the given domain; the universe is the union of the
/// domain entries.
SelectionFunction selection_of_structure(const PreferentialStructure& s,
                                         const std::vector<ModelSet>& domain);

/// Tabulates μ over every subset of `universe`.
SelectionFunction selection_of_structure(const PreferentialStructure& s,
                                         const ModelSet& universe);

}  // namespace prefl
