#include <stdexcept>

#include "asep/lattice.hpp"
#include "asep/textio.hpp"
#include "doctest.h"

using namespace asep;

TEST_CASE("segment round trip") {
  const auto x0 = make_segment_config(NamedConfig::xi0, 6, 2);
  CHECK(format_config(x0) == "110000");
  const auto back = parse_segment_config(format_config(x0));
  CHECK(back.lo == x0.lo);
  CHECK(back.occ == x0.occ);

  SegmentConfig shifted{-2, {1, 0, 1}};
  const auto text = format_config(shifted);
  CHECK(text == "[-2;0]101");
  const auto parsed = parse_segment_config(text);
  CHECK(parsed.lo == -2);
  CHECK(parsed.occ == shifted.occ);

  CHECK(parse_segment_config("[2;4]011").lo == 2);
  CHECK_THROWS_AS(parse_segment_config("[2;5]011"), std::invalid_argument);
  CHECK_THROWS_AS(parse_segment_config("10x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_segment_config(""), std::invalid_argument);
}

TEST_CASE("line round trip") {
  const auto z0 = make_line_config(NamedConfig::zeta0, 4, 2);
  const auto text = format_config(z0);
  CHECK(text == "...(0)|1100|(1)...");
  const auto back = parse_line_config(text);
  CHECK(back.window_lo == 1);
  CHECK(back.occ == z0.occ);
  CHECK(back.left_tail == Tail::holes);
  CHECK(back.right_tail == Tail::particles);

  const auto st = make_line_config(NamedConfig::step, 4, 2);
  const auto st_back = parse_line_config(format_config(st));
  CHECK(st_back.window_lo == st.window_lo);
  CHECK(st_back.occ == st.occ);
  CHECK(st_back.left_tail == Tail::particles);
  CHECK(st_back.right_tail == Tail::holes);

  const auto no_dots = parse_line_config("(0)|[-3]101|(1)");
  CHECK(no_dots.window_lo == -3);
  CHECK(no_dots.occ.size() == 3);

  CHECK_THROWS_AS(parse_line_config("1100"), std::invalid_argument);
  CHECK_THROWS_AS(parse_line_config("...(2)|11|(0)..."),
                  std::invalid_argument);
}

TEST_CASE("colored round trip") {
  const auto rev = reversal_colored(3, 6);
  const auto text = format_config(rev);
  CHECK(text == "[3](6,5,4,3)");
  const auto back = parse_colored_config(text);
  CHECK(back.lo == 3);
  CHECK(back.colors == rev.colors);

  const auto id = parse_colored_config("(1,2,3)");
  CHECK(id.lo == 1);
  CHECK(id.colors[2] == 3);

  CHECK_THROWS_AS(parse_colored_config("[3](6,5,4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_colored_config("(1,1,2)"), std::invalid_argument);
}

TEST_CASE("two species round trip") {
  TwoSpeciesConfig c;
  c.window_lo = -2;
  c.occ = {Species::first, Species::second, Species::hole, Species::second};
  c.left_tail = Species::first;
  c.right_tail = Species::hole;
  const auto text = format_config(c);
  CHECK(text == "...(1)|[-2]1202|(0)...");
  const auto back = parse_two_species_config(text);
  CHECK(back.window_lo == -2);
  CHECK(back.occ == c.occ);
  CHECK(back.left_tail == Species::first);
  CHECK(back.right_tail == Species::hole);

  CHECK_THROWS_AS(parse_two_species_config("...(2)|12|(0)..."),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_two_species_config("...(1)|13|(0)..."),
                  std::invalid_argument);
}
