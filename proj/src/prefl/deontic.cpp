#include "prefl/deontic.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "prefl/error.hpp"
#include "prefl/semantics.hpp"

namespace prefl {

namespace {

void check_size(const ObligationSet& obs) {
  if (obs.obligations.size() > ObligationSet::kMaxObligations) {
    throw CapacityError("at most " + std::to_string(ObligationSet::kMaxObligations) +
                        " obligations are supported");
  }
}

bool precedes(std::uint64_t better, std::uint64_t worse, ViolationOrder order) {
  if (order == ViolationOrder::Count) return std::popcount(better) < std::popcount(worse);
  return better != worse && (better & ~worse) == 0;
}

}  // namespace

std::uint64_t violations(const Alphabet& alphabet, Model m, const ObligationSet& obs) {
  check_size(obs);
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < obs.obligations.size(); ++k) {
    if (!eval(alphabet, m, obs.obligations[k])) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

ModelSet ideal_worlds(const Theory& facts, const ObligationSet& obs, const Alphabet& alphabet,
                      ViolationOrder order) {
  check_size(obs);
  const ModelSet worlds = models_of(facts, alphabet);
  std::vector<ModelSet> satisfied;
  satisfied.reserve(obs.obligations.size());
  for (const auto& o : obs.obligations) satisfied.push_back(models_of(o, alphabet));

  // Worlds grouped by violation profile; minimality only depends on the profile.
  std::map<std::uint64_t, std::vector<Model>> by_profile;
  worlds.for_each([&](Model m) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < satisfied.size(); ++k) {
      if (!satisfied[k].contains(m)) mask |= std::uint64_t{1} << k;
    }
    by_profile[mask].push_back(m);
  });

  ModelSet result(worlds.universe_size());
  for (const auto& [mask, members] : by_profile) {
    const bool dominated = std::any_of(by_profile.begin(), by_profile.end(), [&](const auto& other) {
      return precedes(other.first, mask, order);
    });
    if (dominated) continue;
    for (const Model m : members) result.insert(m);
  }
  return result;
}

bool ought(const Theory& facts, const ObligationSet& obs, const Formula& f,
           const Alphabet& alphabet, ViolationOrder order) {
  return ideal_worlds(facts, obs, alphabet, order).is_subset_of(models_of(f, alphabet));
}

}  // namespace prefl
