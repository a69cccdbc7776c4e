#include "prefl/selection.hpp"

#include <stdexcept>

namespace prefl {

SelectionFunction::SelectionFunction(ModelSet universe, Table table)
    : universe_(std::move(universe)), table_(std::move(table)) {
  for (const auto& [key, value] : table_) {
    if (key.universe_size() != universe_.universe_size() ||
        value.universe_size() != universe_.universe_size()) {
      throw std::invalid_argument("selection entry " + key.to_string() +
                                  " uses a different universe size");
    }
    if (!key.is_subset_of(universe_)) {
      throw std::invalid_argument("selection key " + key.to_string() +
                                  " is not a subset of the universe " + universe_.to_string());
    }
  }
}

std::vector<ModelSet> SelectionFunction::domain() const {
  std::vector<ModelSet> out;
  out.reserve(table_.size());
  for (const auto& entry : table_) out.push_back(entry.first);
  return out;
}

const ModelSet& SelectionFunction::at(const ModelSet& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw std::out_of_range("no selection entry for " + x.to_string());
  return it->second;
}

bool SelectionFunction::domain_is_powerset() const {
  const std::size_t k = universe_.count();
  // Keys are distinct subsets of the universe, so counting suffices.
  return k < 64 && table_.size() == (std::size_t{1} << k);
}

SelectionFunction selection_of_structure(const PreferentialStructure& s,
                                         const std::vector<ModelSet>& domain) {
  ModelSet universe(s.model_count());
  SelectionFunction::Table table;
  for (const auto& x : domain) {
    universe |= x;
    table.emplace(x, mu_of_structure(s, x));
  }
  return SelectionFunction(std::move(universe), std::move(table));
}

SelectionFunction selection_of_structure(const PreferentialStructure& s,
                                         const ModelSet& universe) {
  SelectionFunction::Table table;
  for (auto& x : subsets_of(universe)) {
    ModelSet mu = mu_of_structure(s, x);
    table.emplace(std::move(x), std::move(mu));
  }
  return SelectionFunction(universe, std::move(table));
}

}  // namespace prefl
