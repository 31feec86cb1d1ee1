#include "asep/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asep {

namespace {

void check_q(double Q) {
  if (!(Q >= 0.0) || !(Q < 1.0))
    throw std::invalid_argument("asymmetry Q must lie in [0, 1)");
}

// P(c = j) proportional to Q^j on {0, ..., m}.
int truncated_geometric(double Q, int m, Rng& rng) {
  if (m == 0 || Q == 0.0) return 0;
  const double u = uniform01(rng);
  const double mass = 1.0 - std::pow(Q, m + 1);
  int j = static_cast<int>(std::floor(std::log1p(-u * mass) / std::log(Q)));
  return std::clamp(j, 0, m);
}

}  // namespace

double mallows_normalizer(int n, double Q) {
  check_q(Q);
  if (n < 1) throw std::invalid_argument("need n >= 1");
  double z = 1.0;
  for (int i = 1; i <= n; ++i) z *= (1.0 - Q) / (1.0 - std::pow(Q, i));
  return z;
}

double mallows_pmf(const Permutation& w, double Q) {
  check_q(Q);
  const std::int64_t n = w.n();
  const std::int64_t max_inv = n * (n - 1) / 2;
  return std::pow(Q, static_cast<double>(max_inv - inversions(w))) *
         mallows_normalizer(static_cast<int>(n), Q);
}

Permutation mallows_sample(std::int64_t lo, std::int64_t hi, double Q,
                           Rng& rng) {
  check_q(Q);
  if (hi < lo) throw std::invalid_argument("empty interval");
  const int n = static_cast<int>(hi - lo + 1);

  // Draw v with P(v) ~ Q^{inv(v)} from its Lehmer code, then reverse
  // the image sequence; this flips every pair, so the result carries
  // mass Q^{max_inv - inv}.
  std::vector<std::int64_t> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = lo + i;
  Permutation w;
  w.lo = lo;
  w.images.resize(n);
  for (int i = 0; i < n; ++i) {
    const int c = truncated_geometric(Q, n - 1 - i, rng);
    w.images[i] = remaining[c];
    remaining.erase(remaining.begin() + c);
  }
  std::reverse(w.images.begin(), w.images.end());
  return w;
}

double gaussian_binomial(std::int64_t N, std::int64_t k, double Q) {
  check_q(Q);
  if (k < 0 || k > N) throw std::invalid_argument("need 0 <= k <= N");
  double b = 1.0;
  for (std::int64_t i = 1; i <= k; ++i)
    b *= (1.0 - std::pow(Q, static_cast<double>(N - k + i))) /
         (1.0 - std::pow(Q, static_cast<double>(i)));
  return b;
}

double stationary_pmf_segment(const SegmentConfig& c, double Q) {
  check_q(Q);
  return std::pow(Q, static_cast<double>(inversions01(c))) /
         gaussian_binomial(c.sites(), c.particles(), Q);
}

namespace {

// Common equilibration: sort the values of [a; b] and place value
// u(i) - a of the sorted list at position i. Colored and two-species
// states order their values with the rightward-drifting species
// smallest, occupancies encode the drifting particle as 1, so the
// segment overload sorts descending to land on the same law.
template <class Vec>
void equilibrate_values(Vec& values, std::int64_t lo_global,
                        std::int64_t a, std::int64_t b, double Q, Rng& rng,
                        bool descending = false) {
  const std::size_t ia = static_cast<std::size_t>(a - lo_global);
  const std::size_t ib = static_cast<std::size_t>(b - lo_global);
  std::vector<typename Vec::value_type> sorted(values.begin() + ia,
                                               values.begin() + ib + 1);
  std::sort(sorted.begin(), sorted.end());
  if (descending) std::reverse(sorted.begin(), sorted.end());
  const Permutation u = mallows_sample(a, b, Q, rng);
  for (std::size_t i = 0; i <= ib - ia; ++i)
    values[ia + i] = sorted[u.images[i] - a];
}

void check_segment_range(std::int64_t lo, std::int64_t hi, std::int64_t a,
                         std::int64_t b) {
  if (a > b || a < lo || b > hi)
    throw std::invalid_argument("equilibration segment outside configuration");
}

}  // namespace

SegmentConfig q_equilibrate(SegmentConfig c, std::int64_t a, std::int64_t b,
                            double Q, Rng& rng) {
  check_segment_range(c.lo, c.hi(), a, b);
  equilibrate_values(c.occ, c.lo, a, b, Q, rng, true);
  return c;
}

ColoredConfig q_equilibrate(ColoredConfig c, std::int64_t a, std::int64_t b,
                            double Q, Rng& rng) {
  check_segment_range(c.lo, c.hi(), a, b);
  equilibrate_values(c.colors, c.lo, a, b, Q, rng);
  return c;
}

TwoSpeciesConfig q_equilibrate(TwoSpeciesConfig c, std::int64_t a,
                               std::int64_t b, double Q, Rng& rng) {
  check_segment_range(c.window_lo, c.window_hi(), a, b);
  equilibrate_values(c.occ, c.window_lo, a, b, Q, rng);
  return c;
}

TailEstimate stationary_tail_a(std::int64_t N, std::int64_t k, double Q,
                               std::int64_t l, std::uint64_t mc_samples,
                               std::uint64_t seed, std::uint64_t exact_cap) {
  check_q(Q);
  if (k < 1 || k > N - 1) throw std::invalid_argument("need 1 <= k <= N - 1");
  if (l < 1 || l > N - k - 1)
    throw std::invalid_argument("need 1 <= l <= N - k - 1");
  const std::int64_t threshold = N - k - l;  // event: some particle below it

  double nck = 1.0;
  for (std::int64_t i = 1; i <= k; ++i)
    nck *= static_cast<double>(N - k + i) / static_cast<double>(i);
  if (nck <= static_cast<double>(exact_cap)) {
    // Sum Q^{inv01} over all arrangements; normalize by the total so
    // the product-form normalizer is exercised independently in tests.
    std::vector<std::uint8_t> occ(N, 0);
    std::fill(occ.begin(), occ.begin() + k, 1);
    double total = 0, hit = 0;
    do {
      std::int64_t seen = 0, inv = 0;
      std::int64_t leftmost = N + 1;
      for (std::int64_t i = 0; i < N; ++i) {
        if (occ[i]) {
          ++seen;
          if (leftmost > N) leftmost = i + 1;
        } else {
          inv += seen;
        }
      }
      const double weight = std::pow(Q, static_cast<double>(inv));
      total += weight;
      if (leftmost < threshold) hit += weight;
    } while (std::prev_permutation(occ.begin(), occ.end()));
    return TailEstimate{hit / total, 0.0, true};
  }

  if (mc_samples == 0)
    throw std::invalid_argument("state space too large for enumeration and "
                                "no Monte Carlo samples requested");
  Rng rng(mix_seed(seed, 0xa11ce5));
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < mc_samples; ++s) {
    const Permutation w = mallows_sample(1, N, Q, rng);
    std::int64_t leftmost = N + 1;
    for (int i = 0; i < w.n(); ++i) {
      if (w.images[i] <= k) {
        leftmost = 1 + i;
        break;
      }
    }
    hits += leftmost < threshold;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(mc_samples);
  const double se =
      std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(mc_samples));
  return TailEstimate{p, se, false};
}

}  // namespace asep
