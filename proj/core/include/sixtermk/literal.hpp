#pragma once

#include <string>

#include "sixtermk/group.hpp"

namespace sixtermk {

// Group literal grammar: `Z^r + Z/d1 + Z/d2 + ...`, whitespace-insensitive;
// `Z` means Z^1, `0` (or an empty literal) the zero group.
FinAbGroup parse_group_literal(const std::string& text);

// Canonical rendering: `0`, `Z`, `Z^r`, `Z/d` terms joined by ` + `.
std::string format_group(const FinAbGroup& g);

}  // namespace sixtermk
