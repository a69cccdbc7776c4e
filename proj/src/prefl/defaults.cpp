#include "prefl/defaults.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "prefl/error.hpp"
#include "prefl/semantics.hpp"

namespace prefl {

std::string abnormality_atom(std::size_t k) { return "ab_" + std::to_string(k); }

bool is_abnormality_atom(std::string_view name) {
  if (name.size() < 4 || name.substr(0, 3) != "ab_") return false;
  return std::all_of(name.begin() + 3, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

DefaultTheory::DefaultTheory(Alphabet user_alphabet, Theory facts)
    : alphabet_(std::move(user_alphabet)), facts_(std::move(facts)) {
  for (const auto& a : alphabet_.atoms()) {
    if (is_abnormality_atom(a)) {
      throw std::invalid_argument("atom name '" + a + "' is reserved for abnormality atoms");
    }
  }
}

const DefaultRule& DefaultTheory::add_rule(Formula prerequisite, Formula consequent) {
  if (rules_.size() >= kMaxRules) {
    throw CapacityError("at most " + std::to_string(kMaxRules) + " default rules are supported");
  }
  rules_.push_back(
      DefaultRule{std::move(prerequisite), std::move(consequent), abnormality_atom(rules_.size())});
  return rules_.back();
}

namespace {

void check_atoms(const Formula& f, const Alphabet& user, std::size_t rule_count,
                 bool allow_ab, const char* where) {
  std::set<std::string> atoms;
  collect_atoms(f, atoms);
  auto is_rule_ab = [&](const std::string& a) {
    for (std::size_t k = 0; k < rule_count; ++k) {
      if (abnormality_atom(k) == a) return true;
    }
    return false;
  };
  for (const auto& a : atoms) {
    if (user.contains(a)) continue;
    if (is_abnormality_atom(a) && !allow_ab) {
      throw std::invalid_argument(std::string("abnormality atom '") + a + "' used in a " + where);
    }
    if (is_abnormality_atom(a) && is_rule_ab(a)) continue;
    throw UnknownAtomError(std::string("<") + where + ">", 1, 1, 0, a);
  }
}

}  // namespace

CompiledDefaults compile_defaults(const DefaultTheory& dt) {
  const auto& rules = dt.rules();
  std::vector<std::string> atoms = dt.user_alphabet().atoms();
  for (std::size_t k = 0; k < rules.size(); ++k) atoms.push_back(abnormality_atom(k));
  if (atoms.size() > kMaxCompiledAtoms) {
    throw CapacityError("default theory needs " + std::to_string(atoms.size()) +
                        " atoms; at most " + std::to_string(kMaxCompiledAtoms) + " are supported");
  }
  Alphabet extended(std::move(atoms));

  for (const auto& f : dt.facts().formulas) {
    check_atoms(f, dt.user_alphabet(), rules.size(), true, "fact");
  }
  Theory theory = dt.facts();
  for (const auto& r : rules) {
    check_atoms(r.prerequisite, dt.user_alphabet(), rules.size(), false, "rule");
    check_atoms(r.consequent, dt.user_alphabet(), rules.size(), false, "rule");
    theory.add(Formula::implication(
        Formula::conjunction(r.prerequisite, Formula::negation(Formula::atom(r.ab_atom))),
        r.consequent));
  }

  std::uint32_t ab_bits = 0;
  for (const auto& r : rules) ab_bits |= std::uint32_t{1} << *extended.index_of(r.ab_atom);
  auto structure = PreferentialStructure::from_order(
      extended.model_count(), [ab_bits](Model better, Model worse) {
        const std::uint32_t a = better.index & ab_bits;
        const std::uint32_t b = worse.index & ab_bits;
        return a != b && (a & ~b) == 0;
      });
  return CompiledDefaults{std::move(extended), std::move(theory), std::move(structure)};
}

ModelSet CompiledDefaults::minimal_models(const Theory& t) const {
  return mu_of_structure(structure, models_of(theory + t, alphabet));
}

bool CompiledDefaults::entails(const Theory& t, const Formula& f) const {
  return minimal_models(t).is_subset_of(models_of(f, alphabet));
}

bool default_entails(const DefaultTheory& dt, const Theory& t, const Formula& f) {
  return compile_defaults(dt).entails(t, f);
}

}  // namespace prefl
