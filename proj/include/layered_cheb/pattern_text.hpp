#pragma once

// Text form of patterns shared by the CLI and the Python module:
//   "2,1,4,3"        comma-separated entries
//   "2143"           compact form, only when every entry is a single digit
//   "123;2,1,4,3"    several patterns separated by ';'

#include <string>
#include <string_view>

#include "layered_cheb/permutation.hpp"

namespace layered_cheb {

/// Throws std::invalid_argument on malformed text or a non-permutation.
Permutation parse_permutation(std::string_view text);

/// Throws std::invalid_argument on malformed text, an empty set or duplicates.
PatternSet parse_pattern_set(std::string_view text);

}  // namespace layered_cheb
