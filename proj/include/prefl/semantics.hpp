#pragma once

#include "prefl/alphabet.hpp"
#include "prefl/formula.hpp"
#include "prefl/model_set.hpp"

namespace prefl {

/// Truth value of `f` in `m`. Throws UnknownAtomError for atoms outside the
/// alphabet.
bool eval(const Alphabet& alphabet, Model m, const Formula& f);

/// Models where atom `i` is true.
ModelSet atom_models(const Alphabet& alphabet, std::size_t i);

ModelSet models_of(const Formula& f, const Alphabet& alphabet);
/// Models satisfying every formula; the full universe for an empty theory.
ModelSet models_of(const Theory& t, const Alphabet& alphabet);

/// t ⊨ f: every model of t satisfies f.
bool classical_entails(const Theory& t, const Formula& f, const Alphabet& alphabet);

/// Canonical form of the classical closure of a theory. Two theories have the
/// same consequences iff their closures compare equal.
struct Closure {
  ModelSet models;
  friend bool operator==(const Closure&, const Closure&) = default;
};

Closure consequence_set(const Theory& t, const Alphabet& alphabet);

/// Alphabet holding exactly the atoms of the given theories.
Alphabet alphabet_of(std::initializer_list<const Theory*> theories);

}  // namespace prefl
