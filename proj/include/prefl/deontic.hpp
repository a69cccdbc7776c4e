#pragma once

#include <cstdint>
#include <vector>

#include "prefl/alphabet.hpp"
#include "prefl/formula.hpp"
#include "prefl/model_set.hpp"

namespace prefl {

/// Each formula reads "it ought to be that f".
struct ObligationSet {
  std::vector<Formula> obligations;

  static constexpr std::size_t kMaxObligations = 64;
};

/// How worlds are compared by their violated obligations.
enum class ViolationOrder {
  Subset,  ///< m' ≺ m iff Viol(m') ⊊ Viol(m)
  Count,   ///< m' ≺ m iff |Viol(m')| < |Viol(m)|
};

/// Bit k set iff obligation k is false in m.
std::uint64_t violations(const Alphabet& alphabet, Model m, const ObligationSet& obs);

/// Worlds of `facts` minimal under the violation order.
ModelSet ideal_worlds(const Theory& facts, const ObligationSet& obs, const Alphabet& alphabet,
                      ViolationOrder order = ViolationOrder::Subset);

/// f holds in every ideal world of `facts`.
bool ought(const Theory& facts, const ObligationSet& obs, const Formula& f,
           const Alphabet& alphabet, ViolationOrder order = ViolationOrder::Subset);

}  // namespace prefl
