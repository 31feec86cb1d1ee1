#pragma once

#include <string>
#include <string_view>

#include "asep/lattice.hpp"

namespace asep {

// Textual round-trip format for configurations.
//
//   segment      [2;5]1100        (the [lo;hi] prefix is omitted when lo = 1)
//   line         ...(0)|[1]1100|(1)...
//   colored      [3](5,3,4,6)
//   two-species  ...(1)|[-2]12020|(0)...
//
// Line and two-species windows start at site 1 when [lo] is absent.
// Tails are written as (1) for particles (first-class particles in the
// two-species case) and (0) for holes. The surrounding "..." is
// optional on input and always written on output; the Unicode ellipsis
// is accepted as well.

std::string format_config(const SegmentConfig& c);
std::string format_config(const LineConfig& c);
std::string format_config(const ColoredConfig& c);
std::string format_config(const TwoSpeciesConfig& c);

SegmentConfig parse_segment_config(std::string_view text);
LineConfig parse_line_config(std::string_view text);
ColoredConfig parse_colored_config(std::string_view text);
TwoSpeciesConfig parse_two_species_config(std::string_view text);

}  // namespace asep
