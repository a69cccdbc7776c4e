#pragma once

// Reference implementations used only by the tests. They follow the
// definitions literally and share no code paths with the library beyond the
// plain data types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <algorithm>

#include "prefl/alphabet.hpp"
#include "prefl/defaults.hpp"
#include "prefl/deontic.hpp"
#include "prefl/formula.hpp"
#include "prefl/model_set.hpp"
#include "prefl/selection.hpp"
#include "prefl/structure.hpp"

namespace prefl::oracle {

using Assignment = std::map<std::string, bool>;

inline Assignment assignment(const Alphabet& alphabet, std::uint32_t index) {
  Assignment a;
  for (std::size_t i = 0; i < alphabet.size(); ++i) a[alphabet.atom(i)] = ((index >> i) & 1U) != 0;
  return a;
}

inline bool truth(const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return a.at(f.name());
    case Connective::Top: return true;
    case Connective::Bot: return false;
    case Connective::Not: return !truth(a, f.left());
    default: break;
  }
  const bool l = truth(a, f.left());
  const bool r = truth(a, f.right());
  switch (f.kind()) {
    case Connective::And: return l && r;
    case Connective::Or: return l || r;
    case Connective::Implies: return !l || r;
    default: return l == r;
  }
}

/// Model indices of a theory by enumerating every valuation.
inline std::set<std::uint32_t> models(const Theory& t, const Alphabet& alphabet) {
  std::set<std::uint32_t> out;
  for (std::uint32_t m = 0; m < alphabet.model_count(); ++m) {
    const auto a = assignment(alphabet, m);
    bool ok = true;
    for (const auto& f : t.formulas) ok = ok && truth(a, f);
    if (ok) out.insert(m);
  }
  return out;
}

inline bool entails(const Theory& t, const Formula& f, const Alphabet& alphabet) {
  for (auto m : models(t, alphabet)) {
    if (!truth(assignment(alphabet, m), f)) return false;
  }
  return true;
}

inline std::set<std::uint32_t> as_set(const ModelSet& s) {
  std::set<std::uint32_t> out;
  for (auto m : s.elements()) out.insert(m.index);
  return out;
}

/// μ straight from the edge list: m is chosen iff some copy of m has no
/// incoming edge from a copy of a model in x.
inline std::set<std::uint32_t> mu(const std::vector<Copy>& copies,
                                  const std::vector<Preference>& edges,
                                  const std::set<std::uint32_t>& x) {
  std::set<Copy> killed;
  for (const auto& e : edges) {
    if (x.contains(e.worse.model) && x.contains(e.better.model)) killed.insert(e.worse);
  }
  std::set<std::uint32_t> out;
  for (const auto& c : copies) {
    if (x.contains(c.model) && !killed.contains(c)) out.insert(c.model);
  }
  return out;
}

inline std::set<std::uint32_t> mu(const PreferentialStructure& s, const std::set<std::uint32_t>& x) {
  return mu(s.copies(), s.prefers(), x);
}

inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              int depth) {
  const auto pick = rng() % 10;
  if (depth <= 0 || pick < 2) {
    const auto r = rng() % (atoms.size() + 2);
    if (r == atoms.size()) return Formula::top();
    if (r == atoms.size() + 1) return Formula::bot();
    return Formula::atom(atoms[r]);
  }
  if (pick < 4) return Formula::negation(random_formula(rng, atoms, depth - 1));
  static constexpr Connective ops[] = {Connective::And, Connective::Or, Connective::Implies,
                                       Connective::Iff};
  const Connective op = ops[rng() % 4];
  Formula l = random_formula(rng, atoms, depth - 1);
  Formula r = random_formula(rng, atoms, depth - 1);
  return Formula::binary(op, std::move(l), std::move(r));
}

/// All tables on a two-model universe {0, 1} that satisfy μ(X) ⊆ X.
inline std::vector<SelectionFunction> all_two_model_tables() {
  const ModelSet universe(2, {0, 1});
  const ModelSet e(2), a(2, {0}), b(2, {1});
  std::vector<SelectionFunction> out;
  for (int ma = 0; ma < 2; ++ma) {
    for (int mb = 0; mb < 2; ++mb) {
      for (int mab = 0; mab < 4; ++mab) {
        SelectionFunction::Table t;
        t.emplace(e, e);
        t.emplace(a, ma ? a : e);
        t.emplace(b, mb ? b : e);
        ModelSet v(2);
        if (mab & 1) v.insert(Model{0});
        if (mab & 2) v.insert(Model{1});
        t.emplace(universe, v);
        out.emplace_back(universe, std::move(t));
      }
    }
  }
  return out;
}

/// Every table over {0, 1} realized by some structure with at most two
/// copies per model, found by trying all copy counts and all edge sets.
inline std::set<std::vector<ModelSet>> realizable_two_model_tables() {
  const ModelSet universe(2, {0, 1});
  std::set<std::vector<ModelSet>> out;
  for (std::uint32_t na = 0; na <= 2; ++na) {
    for (std::uint32_t nb = 0; nb <= 2; ++nb) {
      std::vector<Copy> copies;
      for (std::uint32_t t = 0; t < na; ++t) copies.push_back({0, t});
      for (std::uint32_t t = 0; t < nb; ++t) copies.push_back({1, t});
      std::vector<Preference> pairs;
      for (const auto& x : copies) {
        for (const auto& y : copies) {
          if (x != y) pairs.push_back({x, y});
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Preference> chosen;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
        }
        const PreferentialStructure s(2, copies, chosen);
        std::vector<ModelSet> row;
        for (const auto& x : subsets_of(universe)) {
          row.push_back(ModelSet::from_indices(2, [&] {
            auto m = mu(s, as_set(x));
            return std::vector<std::uint32_t>(m.begin(), m.end());
          }()));
        }
        out.insert(std::move(row));
      }
    }
  }
  return out;
}

inline std::vector<ModelSet> row_of(const SelectionFunction& sel) {
  std::vector<ModelSet> row;
  for (const auto& [x, v] : sel.table()) row.push_back(v);
  return row;
}

/// Ideal worlds by enumeration, straight from the ordering definitions.
inline std::set<std::uint32_t> ideal_worlds(const Theory& facts, const ObligationSet& obs,
                                              const Alphabet& a, ViolationOrder order) {
  const auto worlds = models(facts, a);
  auto viol = [&](std::uint32_t m) {
    std::set<std::size_t> v;
    for (std::size_t k = 0; k < obs.obligations.size(); ++k) {
      if (!truth(assignment(a, m), obs.obligations[k])) v.insert(k);
    }
    return v;
  };
  auto better = [&](std::uint32_t x, std::uint32_t y) {
    const auto vx = viol(x), vy = viol(y);
    if (order == ViolationOrder::Count) return vx.size() < vy.size();
    return vx != vy && std::includes(vy.begin(), vy.end(), vx.begin(), vx.end());
  };
  std::set<std::uint32_t> out;
  for (auto m : worlds) {
    bool dominated = false;
    for (auto o : worlds) dominated = dominated || better(o, m);
    if (!dominated) out.insert(m);
  }
  return out;
}

/// Minimal models by brute force: models of the compiled theory whose set of
/// true ab atoms has no strict subset among the others.
inline std::set<std::uint32_t> minimal_by_abnormality(const CompiledDefaults& c, const Theory& t,
                                                        std::uint32_t ab_bits) {
  const auto ms = models(c.theory + t, c.alphabet);
  std::set<std::uint32_t> out;
  for (auto m : ms) {
    bool dominated = false;
    for (auto o : ms) {
      const auto a = o & ab_bits, b = m & ab_bits;
      if (a != b && (a & ~b) == 0) dominated = true;
    }
    if (!dominated) out.insert(m);
  }
  return out;
}

/// (μPR) by checking every pair of keys directly, using std::set algebra.
inline bool violates_pr(const SelectionFunction& sel) {
  for (const auto& [x, mx] : sel.table()) {
    for (const auto& [y, my] : sel.table()) {
      const auto xs = as_set(x), ys = as_set(y), mxs = as_set(mx), mys = as_set(my);
      if (!std::includes(xs.begin(), xs.end(), ys.begin(), ys.end())) continue;
      for (auto m : mxs) {
        if (ys.contains(m) && !mys.contains(m)) return true;
      }
    }
  }
  return false;
}

}  // namespace prefl::oracle
