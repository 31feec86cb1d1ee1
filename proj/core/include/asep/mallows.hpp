#pragma once

#include <cstdint>

#include "asep/lattice.hpp"
#include "asep/permutation.hpp"
#include "asep/rng.hpp"

namespace asep {

// Mallows weight of w in S_{[lo;hi]}: proportional to Q^{-inv(w)},
// normalized so that the order reversal carries the largest mass,
//   P(w) = Q^{n(n-1)/2 - inv(w)} * mallows_normalizer(n, Q).
// Q = 0 degenerates to the point mass on the reversal (0^0 = 1).
double mallows_normalizer(int n, double Q);
double mallows_pmf(const Permutation& w, double Q);

// Exact sampler via independent truncated-geometric Lehmer codes.
Permutation mallows_sample(std::int64_t lo, std::int64_t hi, double Q, Rng& rng);

// Gaussian binomial coefficient, the normalizer of the projected
// stationary law on k-particle segment states.
double gaussian_binomial(std::int64_t N, std::int64_t k, double Q);

// Stationary probability of a segment state among those with the same
// particle number: Q^{inversions01} / gaussian_binomial.
double stationary_pmf_segment(const SegmentConfig& c, double Q);

// Replaces the arrangement inside [a; b] by a fresh Mallows-distributed
// one, keeping the multiset of values. This is the configuration-level
// action of multiplying by the Mallows element of [a; b] on the left.
SegmentConfig q_equilibrate(SegmentConfig c, std::int64_t a, std::int64_t b,
                            double Q, Rng& rng);
ColoredConfig q_equilibrate(ColoredConfig c, std::int64_t a, std::int64_t b,
                            double Q, Rng& rng);
TwoSpeciesConfig q_equilibrate(TwoSpeciesConfig c, std::int64_t a,
                               std::int64_t b, double Q, Rng& rng);

struct TailEstimate {
  double value = 0;
  double se = 0;
  bool exact = false;
};

// Stationary mass of the event "leftmost particle below N - k - l",
// exact by enumeration when the state space is small enough, Monte
// Carlo through the colored sampler otherwise.
TailEstimate stationary_tail_a(std::int64_t N, std::int64_t k, double Q,
                               std::int64_t l, std::uint64_t mc_samples,
                               std::uint64_t seed,
                               std::uint64_t exact_cap = 2000000);

}  // namespace asep
