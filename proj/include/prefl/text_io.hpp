#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefl/deontic.hpp"
#include "prefl/formula.hpp"
#include "prefl/parser.hpp"
#include "prefl/selection.hpp"
#include "prefl/structure.hpp"

// Line-oriented text formats. In every format `#` starts a comment and
// blank lines are ignored. Errors are reported as ParseError with the
// source name, line and column.

namespace prefl {

/// Theory file: one formula per line.
Theory parse_theory(std::string_view text, std::string_view source, AtomScope scope = {});

/// Structure file:
///
///   copies: 0:0 1:0 1:1
///   0:0 < 1:0
///
/// `a < b` reads a ≺ b. Model indices must be below `model_count`.
PreferentialStructure parse_structure(std::string_view text, std::string_view source,
                                      std::size_t model_count);
std::string write_structure(const PreferentialStructure& s);

/// Selection file:
///
///   universe: 0 1
///   {} -> {}
///   {0,1} -> {0}
///
/// Keys must be distinct subsets of the universe. The universe size of the
/// resulting sets is one past the largest index mentioned.
SelectionFunction parse_selection(std::string_view text, std::string_view source);
std::string write_selection(const SelectionFunction& sel);

/// Defaults file: `default: <formula> => <formula>` rule lines interleaved
/// with ordinary fact lines. Rules are numbered in file order.
struct DefaultsFile {
  Theory facts;
  std::vector<std::pair<Formula, Formula>> rules;
};
DefaultsFile parse_defaults(std::string_view text, std::string_view source,
                            AtomScope scope = {});

/// Obligations file: `ought: <formula>` lines.
ObligationSet parse_obligations(std::string_view text, std::string_view source,
                                AtomScope scope = {});

/// Whole file contents; throws Error if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace prefl
