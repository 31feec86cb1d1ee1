#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asep/lattice.hpp"
#include "doctest.h"

using namespace asep;

TEST_CASE("extended site order") {
  const auto ni = ExtendedSite::neg_infinity();
  const auto a = ExtendedSite::finite(-3);
  const auto b = ExtendedSite::finite(7);
  const auto pi = ExtendedSite::pos_infinity();
  CHECK(ni < a);
  CHECK(a < b);
  CHECK(b < pi);
  CHECK(ni < pi);
  CHECK(a == ExtendedSite::finite(-3));
  CHECK(a <= ExtendedSite::finite(-3));
  CHECK(b > a);
  CHECK(pi >= pi);
  CHECK(!(pi < pi));
  CHECK(!(ni < ni));
}

TEST_CASE("named segment configs") {
  const auto x0 = make_segment_config(NamedConfig::xi0, 6, 2);
  CHECK(x0.lo == 1);
  CHECK(x0.sites() == 6);
  CHECK(x0.particles() == 2);
  CHECK(x0.occupied(1));
  CHECK(x0.occupied(2));
  CHECK(!x0.occupied(3));
  CHECK(!x0.occupied(6));

  const auto x1 = make_segment_config(NamedConfig::xi1, 6, 2);
  CHECK(x1.particles() == 2);
  CHECK(!x1.occupied(1));
  CHECK(!x1.occupied(4));
  CHECK(x1.occupied(5));
  CHECK(x1.occupied(6));

  CHECK_THROWS_AS(make_segment_config(NamedConfig::xi0, 4, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_segment_config(NamedConfig::step, 4, 2),
                  std::invalid_argument);
}

TEST_CASE("named line configs") {
  const auto z0 = make_line_config(NamedConfig::zeta0, 6, 2);
  CHECK(z0.window_lo == 1);
  CHECK(z0.window_hi() == 6);
  CHECK(z0.left_tail == Tail::holes);
  CHECK(z0.right_tail == Tail::particles);
  CHECK(z0.occupied(1));
  CHECK(z0.occupied(2));
  CHECK(!z0.occupied(3));
  CHECK(!z0.occupied(0));
  CHECK(!z0.occupied(-40));
  CHECK(z0.occupied(7));
  CHECK(z0.occupied(40));

  const auto z1 = make_line_config(NamedConfig::zeta1, 6, 2);
  CHECK(!z1.occupied(1));
  CHECK(!z1.occupied(4));
  CHECK(z1.occupied(5));
  CHECK(z1.occupied(6));
  CHECK(z1.occupied(100));
  CHECK(!z1.occupied(-100));

  const auto st = make_line_config(NamedConfig::step, 6, 2);
  CHECK(st.occupied(-1));
  CHECK(st.occupied(-50));
  CHECK(!st.occupied(0));
  CHECK(!st.occupied(50));

  const auto sh = make_line_config(NamedConfig::step_shifted, 6, 2);
  CHECK(sh.occupied(2));
  CHECK(!sh.occupied(3));
  for (std::int64_t z = -20; z <= 20; ++z)
    CHECK(sh.occupied(z) == st.occupied(z - 3));
}

TEST_CASE("scans and sentinels") {
  const auto x0 = make_segment_config(NamedConfig::xi0, 5, 2);
  CHECK(leftmost_particle(x0) == ExtendedSite::finite(1));
  CHECK(rightmost_hole(x0) == ExtendedSite::finite(5));

  SegmentConfig empty{1, std::vector<std::uint8_t>(4, 0)};
  CHECK(leftmost_particle(empty) == ExtendedSite::pos_infinity());
  CHECK(rightmost_hole(empty) == ExtendedSite::finite(4));

  SegmentConfig full{1, std::vector<std::uint8_t>(4, 1)};
  CHECK(leftmost_particle(full) == ExtendedSite::finite(1));
  CHECK(rightmost_hole(full) == ExtendedSite::neg_infinity());

  const auto z0 = make_line_config(NamedConfig::zeta0, 6, 2);
  CHECK(leftmost_particle(z0) == ExtendedSite::finite(1));
  CHECK(rightmost_hole(z0) == ExtendedSite::finite(6));

  const auto z1 = make_line_config(NamedConfig::zeta1, 6, 2);
  CHECK(leftmost_particle(z1) == ExtendedSite::finite(5));
  CHECK(rightmost_hole(z1) == ExtendedSite::finite(4));

  LineConfig all_part = z1;
  std::fill(all_part.occ.begin(), all_part.occ.end(), 1);
  CHECK(leftmost_particle(all_part) == ExtendedSite::finite(1));
  CHECK(rightmost_hole(all_part) == ExtendedSite::finite(0));

  const auto st = make_line_config(NamedConfig::step, 6, 2);
  CHECK(leftmost_particle(st) == ExtendedSite::neg_infinity());
  CHECK(rightmost_hole(st) == ExtendedSite::pos_infinity());
}

TEST_CASE("z index and partial order") {
  const std::int64_t N = 8, k = 3;
  const auto z0 = make_line_config(NamedConfig::zeta0, N, k);
  const auto z1 = make_line_config(NamedConfig::zeta1, N, k);
  CHECK(z_index(z0) == N - k + 1);
  CHECK(z_index(z1) == N - k + 1);
  CHECK(partial_order_leq(z0, z1));
  CHECK(!partial_order_leq(z1, z0));
  CHECK(partial_order_leq(z0, z0));

  const auto x0 = make_segment_config(NamedConfig::xi0, N, k);
  const auto x1 = make_segment_config(NamedConfig::xi1, N, k);
  CHECK(partial_order_leq(x0, x1));
  CHECK(!partial_order_leq(x1, x0));

  SegmentConfig mid{1, {0, 1, 0, 1, 0, 1, 0, 0}};
  CHECK(partial_order_leq(x0, mid));
  CHECK(partial_order_leq(mid, x1));

  SegmentConfig other_k{1, {1, 1, 0, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(partial_order_leq(x0, other_k), std::invalid_argument);
}

TEST_CASE("colored constructions and projections") {
  const auto id = identity_colored(-2, 3);
  CHECK(id.lo == -2);
  CHECK(id.hi() == 3);
  for (std::int64_t i = -2; i <= 3; ++i) CHECK(id.colors[i + 2] == i);

  const auto rev = reversal_colored(-2, 3);
  for (std::int64_t i = -2; i <= 3; ++i) CHECK(rev.colors[i + 2] == 1 - i);

  const auto seg = project_to_segment(rev, 0);
  CHECK(seg.lo == -2);
  CHECK(seg.particles() == 3);
  CHECK(!seg.occupied(-2));
  CHECK(seg.occupied(1));
  CHECK(seg.occupied(3));

  const auto two = project_to_two_species(rev, -1, 1);
  CHECK(two.at(3) == Species::first);
  CHECK(two.at(1) == Species::second);
  CHECK(two.at(-2) == Species::hole);
  const auto merged = merge_species(two);
  for (std::int64_t s = -2; s <= 3; ++s)
    CHECK(merged.occupied(s) == (rev.colors[s + 2] <= 1));
}

TEST_CASE("inversions of a 01 word") {
  CHECK(inversions01(make_segment_config(NamedConfig::xi0, 6, 2)) == 8);
  CHECK(inversions01(make_segment_config(NamedConfig::xi1, 6, 2)) == 0);
  SegmentConfig c{1, {1, 0, 1, 0}};
  CHECK(inversions01(c) == 3);
  SegmentConfig flat{1, {0, 0, 1, 1}};
  CHECK(inversions01(flat) == 0);
}

TEST_CASE("validate rejects malformed states") {
  ColoredConfig bad;
  bad.lo = 1;
  bad.colors = {1, 1, 3};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  SegmentConfig s{1, {0, 2, 1}};
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}
