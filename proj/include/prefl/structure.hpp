#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "prefl/alphabet.hpp"
#include "prefl/formula.hpp"
#include "prefl/model_set.hpp"

namespace prefl {

/// An occurrence of a model inside a preferential structure. The tag
/// distinguishes several copies of the same model.
struct Copy {
  std::uint32_t model = 0;
  std::uint32_t tag = 0;

  friend auto operator<=>(const Copy&, const Copy&) = default;
};

std::string to_string(const Copy& c);

/// `better` ≺ `worse`: `better` is strictly more normal (fewer violations).
struct Preference {
  Copy better;
  Copy worse;

  friend auto operator<=>(const Preference&, const Preference&) = default;
};

/// Finite set of copies with an irreflexive preference relation. The
/// relation need not be transitive or acyclic.
class PreferentialStructure {
 public:
  /// Throws std::invalid_argument on duplicate copies, models outside
  /// [0, model_count), edges to undeclared copies, or reflexive edges.
  PreferentialStructure(std::size_t model_count, std::vector<Copy> copies,
                        const std::vector<Preference>& prefers);

  /// One copy (tag 0) per model of the universe, `better ≺ worse` wherever
  /// `precedes(better, worse)` holds for distinct models.
  static PreferentialStructure from_order(
      std::size_t model_count, const std::function<bool(Model, Model)>& precedes);

  std::size_t model_count() const { return model_count_; }
  /// Sorted by (model, tag).
  const std::vector<Copy>& copies() const { return copies_; }
  /// Sorted edge list.
  std::vector<Preference> prefers() const;
  std::size_t edge_count() const { return edge_count_; }
  /// Indices into copies() of the copies strictly preferred to copy i.
  const std::vector<std::uint32_t>& killers_of(std::size_t i) const { return killers_[i]; }
  std::size_t copies_of(std::uint32_t model) const;

  friend bool operator==(const PreferentialStructure& a, const PreferentialStructure& b);

 private:
  PreferentialStructure() = default;

  std::size_t model_count_ = 0;
  std::vector<Copy> copies_;
  std::vector<std::vector<std::uint32_t>> killers_;
  std::size_t edge_count_ = 0;
};

/// μ(x): models of x with at least one copy that no copy of a model in x
/// is preferred to.
ModelSet mu_of_structure(const PreferentialStructure& s, const ModelSet& x);

/// t |~ f: f holds in every μ-minimal model of t.
bool pref_entails(const PreferentialStructure& s, const Theory& t, const Formula& f,
                  const Alphabet& alphabet);

/// Elements of x minimal under a strict order on models, one copy per model.
/// Quadratic in |x|; structures are never materialized.
ModelSet minimal_under(const ModelSet& x, const std::function<bool(Model, Model)>& precedes);

}  // namespace prefl
