#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "prefl/alphabet.hpp"
#include "prefl/formula.hpp"

namespace prefl {

/// How the parser treats atom names.
///
///  - open: any well-formed name is accepted;
///  - strict: names must belong to the given alphabet (UnknownAtomError);
///  - building: names are added to the builder, which must not be frozen
///    if it has not seen the name yet.
struct AtomScope {
  const Alphabet* alphabet = nullptr;
  AlphabetBuilder* builder = nullptr;

  static AtomScope open() { return {}; }
  static AtomScope strict(const Alphabet& a) { return {&a, nullptr}; }
  static AtomScope building(AlphabetBuilder& b) { return {nullptr, &b}; }
};

/// Where a piece of text came from, for error messages.
struct SourcePos {
  std::string source = "<input>";
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Grammar (lowest to highest precedence):
///
///   iff     := implies ( "<->" implies )*        left-associative
///   implies := or ( "->" implies )?              right-associative
///   or      := and ( "|" and )*
///   and     := unary ( "&" unary )*
///   unary   := "!" unary | "(" iff ")" | "T" | "F" | atom
///   atom    := [a-z][a-zA-Z0-9_]*
///
/// Throws ParseError on malformed text and UnknownAtomError in strict mode.
Formula parse_formula(std::string_view text, AtomScope scope = {},
                      const SourcePos& at = {});

}  // namespace prefl
