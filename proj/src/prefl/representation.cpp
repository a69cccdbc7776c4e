#include "prefl/representation.hpp"

#include <set>

#include "prefl/error.hpp"

namespace prefl {

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_subset_closed(const SelectionFunction& sel) {
  for (const auto& [x, mu] : sel.table()) {
    for (const auto& sub : subsets_of(x)) {
      if (!sel.has(sub)) {
        throw DomainError("selection domain is not closed under subsets: " + sub.to_string() +
                          " (a subset of " + x.to_string() + ") is missing");
      }
    }
  }
}

}  // namespace

std::string to_string(const ViolationWitness& w) {
  if (w.kind == ViolationWitness::Kind::Subset) {
    return "SUBSET-VIOLATION x=" + w.set.to_string() + " m=" + std::to_string(w.model.index);
  }
  return "PR-VIOLATION x=" + w.set.to_string() + " x'=" + w.subset.to_string() +
         " m=" + std::to_string(w.model.index);
}

bool reproduces(const ViolationWitness& w, const SelectionFunction& sel) {
  if (!sel.has(w.set)) return false;
  const ModelSet& mu = sel.at(w.set);
  if (w.kind == ViolationWitness::Kind::Subset) {
    return mu.contains(w.model) && !w.set.contains(w.model);
  }
  if (!sel.has(w.subset) || w.subset.universe_size() != w.set.universe_size() ||
      !w.subset.is_subset_of(w.set)) {
    return false;
  }
  return mu.contains(w.model) && w.subset.contains(w.model) &&
         !sel.at(w.subset).contains(w.model);
}

std::optional<ViolationWitness> check_properties(const SelectionFunction& sel) {
  if (!sel.domain_is_powerset()) require_subset_closed(sel);

  for (const auto& [x, mu] : sel.table()) {
    if (!mu.is_subset_of(x)) {
      return ViolationWitness{ViolationWitness::Kind::Subset, x, ModelSet(x.universe_size()),
                              *(mu - x).first()};
    }
  }
  for (const auto& [x, mu] : sel.table()) {
    for (const auto& sub : subsets_of(x)) {
      const ModelSet lost = (mu & sub) - sel.at(sub);
      if (!lost.empty()) {
        return ViolationWitness{ViolationWitness::Kind::PR, x, sub, *lost.first()};
      }
    }
  }
  return std::nullopt;
}

std::variant<SynthesisReport, ViolationWitness> synthesize_structure(
    const SelectionFunction& sel) {
  const ModelSet& universe = sel.universe();
  if (universe.count() > kMaxSynthesisUniverse) {
    throw CapacityError("synthesis supports at most " + std::to_string(kMaxSynthesisUniverse) +
                        " models; universe has " + std::to_string(universe.count()));
  }
  if (!sel.domain_is_powerset()) {
    throw DomainError("synthesis requires every subset of the universe as a key");
  }
  if (auto witness = check_properties(sel)) return *witness;

  // Each copy records the models whose copies kill it.
  struct Planned {
    Copy copy;
    std::set<std::uint32_t> killed_by;
  };
  std::vector<Planned> plan;
  SynthesisReport report{PreferentialStructure(universe.universe_size(), {}, {}), {}, false};

  for (const Model m : universe.elements()) {
    std::vector<const ModelSet*> must_die;
    std::vector<const ModelSet*> survives_in;
    for (const auto& [y, mu] : sel.table()) {
      if (!y.contains(m)) continue;
      (mu.contains(m) ? survives_in : must_die).push_back(&y);
    }

    std::uint32_t tag = 0;
    for (const ModelSet* x : survives_in) {
      Planned p{Copy{m.index, tag++}, {}};
      for (const ModelSet* y : must_die) {
        const auto killer = (*y - *x).first();
        if (!killer) {
          throw InternalError("no killer for model " + std::to_string(m.index) + " in " +
                              y->to_string() + " outside " + x->to_string() +
                              "; the property check accepted an invalid table");
        }
        p.killed_by.insert(killer->index);
      }
      plan.push_back(std::move(p));
    }
    if (survives_in.empty()) {
      // Never chosen, so μ({m}) is empty: two copies of m kill each other.
      for (std::uint32_t t = 0; t < 2; ++t) {
        Planned p{Copy{m.index, tag++}, {}};
        for (const ModelSet* y : must_die) p.killed_by.insert(y->first()->index);
        plan.push_back(std::move(p));
      }
    }
    report.copies_per_model[m.index] = tag;
  }

  std::vector<Copy> copies;
  copies.reserve(plan.size());
  for (const auto& p : plan) copies.push_back(p.copy);
  std::vector<Preference> prefers;
  for (const auto& p : plan) {
    for (const auto& q : plan) {
      if (q.copy != p.copy && p.killed_by.contains(q.copy.model)) {
        prefers.push_back(Preference{q.copy, p.copy});
      }
    }
  }

  report.structure = PreferentialStructure(universe.universe_size(), std::move(copies), prefers);
  report.verified = selection_of_structure(report.structure, universe) == sel;
  return report;
}

PreferentialStructure random_structure(std::mt19937_64& rng, const ModelSet& universe,
                                       std::size_t max_copies) {
  std::vector<Copy> copies;
  for (const Model m : universe.elements()) {
    const std::size_t n = rng() % 16 == 0 ? 0 : 1 + rng() % max_copies;
    for (std::uint32_t t = 0; t < n; ++t) copies.push_back(Copy{m.index, t});
  }
  const double density = unit_interval(rng);
  std::vector<Preference> prefers;
  for (const auto& a : copies) {
    for (const auto& b : copies) {
      if (a != b && unit_interval(rng) < density) prefers.push_back(Preference{a, b});
    }
  }
  return PreferentialStructure(universe.universe_size(), std::move(copies), prefers);
}

SelectionFunction random_selection(std::uint64_t seed, const ModelSet& universe,
                                   SelectionMode mode) {
  if (universe.count() > kMaxSynthesisUniverse) {
    throw CapacityError("random selections support at most " +
                        std::to_string(kMaxSynthesisUniverse) + " models");
  }
  std::mt19937_64 rng(seed);
  if (mode == SelectionMode::FromStructure) {
    return selection_of_structure(random_structure(rng, universe), universe);
  }
  SelectionFunction::Table table;
  for (auto& x : subsets_of(universe)) {
    ModelSet mu(x.universe_size());
    x.for_each([&](Model m) {
      if (rng() & 1U) mu.insert(m);
    });
    table.emplace(std::move(x), std::move(mu));
  }
  return SelectionFunction(universe, std::move(table));
}

}  // namespace prefl
