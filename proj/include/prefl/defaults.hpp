#pragma once

#include <string>
#include <vector>

#include "prefl/alphabet.hpp"
#include "prefl/formula.hpp"
#include "prefl/model_set.hpp"
#include "prefl/structure.hpp"

namespace prefl {

/// "Normally, prerequisite implies consequent." Rule k is blocked exactly in
/// the models where its abnormality atom `ab_k` is true.
struct DefaultRule {
  Formula prerequisite;
  Formula consequent;
  std::string ab_atom;
};

/// Name of the abnormality atom for rule k: "ab_k".
std::string abnormality_atom(std::size_t k);

/// True for reserved names of the form ab_<digits>.
bool is_abnormality_atom(std::string_view name);

/// Hard facts plus default rules over a user alphabet. Facts may mention the
/// abnormality atoms of existing rules (stating exceptions); rules may not.
class DefaultTheory {
 public:
  static constexpr std::size_t kMaxRules = 8;

  /// Throws std::invalid_argument if the alphabet uses a reserved ab_ name.
  explicit DefaultTheory(Alphabet user_alphabet, Theory facts = {});

  const Alphabet& user_alphabet() const { return alphabet_; }
  const Theory& facts() const { return facts_; }
  const std::vector<DefaultRule>& rules() const { return rules_; }

  void add_fact(Formula f) { facts_.add(std::move(f)); }
  /// Throws CapacityError beyond kMaxRules.
  const DefaultRule& add_rule(Formula prerequisite, Formula consequent);

 private:
  Alphabet alphabet_;
  Theory facts_;
  std::vector<DefaultRule> rules_;
};

/// Default theory compiled into classical facts over the extended alphabet
/// and a structure preferring subset-smaller sets of abnormalities.
struct CompiledDefaults {
  Alphabet alphabet;
  Theory theory;
  PreferentialStructure structure;

  /// Minimal models of the compiled theory plus `t`.
  ModelSet minimal_models(const Theory& t) const;
  bool entails(const Theory& t, const Formula& f) const;
};

/// Largest extended alphabet for which the structure is materialized.
inline constexpr std::size_t kMaxCompiledAtoms = 12;

/// Throws CapacityError when the extended alphabet exceeds kMaxCompiledAtoms,
/// UnknownAtomError for atoms outside the user alphabet, and
/// std::invalid_argument when a rule mentions an abnormality atom.
CompiledDefaults compile_defaults(const DefaultTheory& dt);

bool default_entails(const DefaultTheory& dt, const Theory& t, const Formula& f);

}  // namespace prefl
