#include "prefl/semantics.hpp"

#include <set>

#include "prefl/error.hpp"

namespace prefl {

namespace {

std::size_t require_atom(const Alphabet& alphabet, const std::string& name) {
  auto i = alphabet.index_of(name);
  if (!i) throw UnknownAtomError("<formula>", 1, 1, 0, name);
  return *i;
}

}  // namespace

bool eval(const Alphabet& alphabet, Model m, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return m.holds(require_atom(alphabet, f.name()));
    case Connective::Top: return true;
    case Connective::Bot: return false;
    case Connective::Not: return !eval(alphabet, m, f.left());
    case Connective::And: return eval(alphabet, m, f.left()) && eval(alphabet, m, f.right());
    case Connective::Or: return eval(alphabet, m, f.left()) || eval(alphabet, m, f.right());
    case Connective::Implies: return !eval(alphabet, m, f.left()) || eval(alphabet, m, f.right());
    case Connective::Iff: return eval(alphabet, m, f.left()) == eval(alphabet, m, f.right());
  }
  return false;
}

ModelSet atom_models(const Alphabet& alphabet, std::size_t i) {
  ModelSet s(alphabet.model_count());
  for (std::uint32_t m = 0; m < alphabet.model_count(); ++m) {
    if ((m >> i) & 1U) s.insert(Model{m});
  }
  return s;
}

// Evaluates all models at once through set algebra.
ModelSet models_of(const Formula& f, const Alphabet& alphabet) {
  const std::size_t n = alphabet.model_count();
  switch (f.kind()) {
    case Connective::Atom: return atom_models(alphabet, require_atom(alphabet, f.name()));
    case Connective::Top: return ModelSet::full(n);
    case Connective::Bot: return ModelSet(n);
    case Connective::Not: return models_of(f.left(), alphabet).complement();
    case Connective::And: return models_of(f.left(), alphabet) & models_of(f.right(), alphabet);
    case Connective::Or: return models_of(f.left(), alphabet) | models_of(f.right(), alphabet);
    case Connective::Implies:
      return models_of(f.left(), alphabet).complement() | models_of(f.right(), alphabet);
    case Connective::Iff: {
      const ModelSet a = models_of(f.left(), alphabet);
      const ModelSet b = models_of(f.right(), alphabet);
      return (a & b) | (a.complement() & b.complement());
    }
  }
  return ModelSet(n);
}

ModelSet models_of(const Theory& t, const Alphabet& alphabet) {
  ModelSet s = ModelSet::full(alphabet.model_count());
  for (const auto& f : t.formulas) s &= models_of(f, alphabet);
  return s;
}

bool classical_entails(const Theory& t, const Formula& f, const Alphabet& alphabet) {
  return models_of(t, alphabet).is_subset_of(models_of(f, alphabet));
}

Closure consequence_set(const Theory& t, const Alphabet& alphabet) {
  return Closure{models_of(t, alphabet)};
}

Alphabet alphabet_of(std::initializer_list<const Theory*> theories) {
  std::set<std::string> atoms;
  for (const Theory* t : theories) collect_atoms(*t, atoms);
  return Alphabet(std::vector<std::string>(atoms.begin(), atoms.end()));
}

}  // namespace prefl
