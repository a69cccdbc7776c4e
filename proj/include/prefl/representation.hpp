#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "prefl/model_set.hpp"
#include "prefl/selection.hpp"
#include "prefl/structure.hpp"

namespace prefl {

/// A concrete failure of (μ⊆) or (μPR).
///
/// Subset: `model` ∈ μ(set) \ set.
/// PR:     `subset` ⊆ `set` and `model` ∈ (μ(set) ∩ subset) \ μ(subset).
struct ViolationWitness {
  enum class Kind { Subset, PR };

  Kind kind = Kind::Subset;
  ModelSet set;
  ModelSet subset;
  Model model;

  friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

std::string to_string(const ViolationWitness& w);

/// True iff the witness still exhibits its violation against `sel`.
bool reproduces(const ViolationWitness& w, const SelectionFunction& sel);

/// Checks (μ⊆) on every key, then (μPR) on every pair of keys x' ⊆ x. Keys
/// and subsets are visited by ascending bit-set value, so the witness is the
/// first violation in that order; (μ⊆) failures are reported first.
///
/// The domain must be closed under subsets of its keys; otherwise throws
/// DomainError naming the first missing subset.
std::optional<ViolationWitness> check_properties(const SelectionFunction& sel);

struct SynthesisReport {
  PreferentialStructure structure;
  std::map<std::uint32_t, std::size_t> copies_per_model;
  bool verified = false;
};

/// Largest universe accepted by synthesize_structure.
inline constexpr std::size_t kMaxSynthesisUniverse = 8;

/// Builds a preferential structure whose μ reproduces `sel` exactly, or
/// returns the violation that makes this impossible.
///
/// For every model m let D_m be the keys Y with m ∈ Y and m ∉ μ(Y). Each key
/// X with m ∈ μ(X) yields one copy of m, killed on each Y ∈ D_m by every
/// copy of min(Y \ X). A model chosen by no key gets two copies that kill
/// each other and are killed on each Y ∈ D_m by every copy of min(Y).
///
/// Requires a full powerset domain (DomainError) and a universe of at most
/// kMaxSynthesisUniverse models (CapacityError).
std::variant<SynthesisReport, ViolationWitness> synthesize_structure(
    const SelectionFunction& sel);

enum class SelectionMode { FromStructure, Arbitrary };

/// Random structure over the models of `universe`: 1 or 2 copies per model
/// (occasionally none) and a random edge density.
PreferentialStructure random_structure(std::mt19937_64& rng, const ModelSet& universe,
                                       std::size_t max_copies = 2);

/// Deterministic per seed. FromStructure tabulates a random structure over
/// the full powerset; Arbitrary maps each subset to a random subset of
/// itself.
SelectionFunction random_selection(std::uint64_t seed, const ModelSet& universe,
                                   SelectionMode mode);

}  // namespace prefl
