#include "prefl/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "prefl/error.hpp"

namespace prefl {

bool is_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
    throw std::invalid_argument("duplicate atom in alphabet");
  }
  for (const auto& a : atoms_) {
    if (!is_atom_name(a)) throw std::invalid_argument("invalid atom name '" + a + "'");
  }
  if (atoms_.empty()) throw CapacityError("alphabet must contain at least one atom");
  if (atoms_.size() > kMaxAtoms) {
    throw CapacityError("alphabet has " + std::to_string(atoms_.size()) +
                        " atoms; at most " + std::to_string(kMaxAtoms) + " are supported");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::string Alphabet::bits(Model m) const {
  std::string s;
  s.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) s += m.holds(i) ? '1' : '0';
  return s;
}

std::string Alphabet::render(Model m) const {
  std::string s;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) s += ' ';
    if (!m.holds(i)) s += '!';
    s += atoms_[i];
  }
  return s;
}

void AlphabetBuilder::add(std::string_view name) {
  if (names_.contains(name)) return;
  if (frozen_) throw Error("alphabet is frozen; cannot add atom '" + std::string(name) + "'");
  if (!is_atom_name(name)) throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  names_.emplace(name);
}

bool AlphabetBuilder::contains(std::string_view name) const { return names_.contains(name); }

Alphabet AlphabetBuilder::freeze() {
  frozen_ = true;
  return Alphabet(std::vector<std::string>(names_.begin(), names_.end()));
}

}  // namespace prefl
