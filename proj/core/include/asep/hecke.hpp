#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "asep/params.hpp"
#include "asep/permutation.hpp"
#include "asep/symmetric_group.hpp"

namespace asep {

// Default bound on the group order a single element may live on.
inline constexpr std::uint64_t kDefaultHeckeCap = 5040;  // 7!

// Element of the Hecke algebra of S_{[lo;hi]} in the T-basis, stored
// sparsely as (rank, weight) pairs sorted by rank. The product is the
// one generated by
//   T_s T_w = T_{ws}             if the exchange adds an inversion,
//   T_s T_w = (1-Q) T_w + Q T_{ws}   otherwise,
// where s exchanges the values at two adjacent positions. Probability
// elements (nonnegative weights summing to one) stay probability
// elements under this product.
class HeckeElement {
 public:
  HeckeElement(std::int64_t lo, std::int64_t hi,
               std::shared_ptr<const SymmetricGroupTable> table);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  int n() const { return table_->n(); }
  const SymmetricGroupTable& table() const { return *table_; }
  std::shared_ptr<const SymmetricGroupTable> table_ptr() const {
    return table_;
  }

  const std::vector<std::pair<std::uint32_t, double>>& weights() const {
    return weights_;
  }
  double weight(std::uint32_t rank) const;
  double weight(const Permutation& w) const;
  std::size_t support_size() const { return weights_.size(); }
  double total_weight() const;

  // Replaces the weights; pairs need not be sorted or unique, zeros
  // are dropped.
  void set_weights(std::vector<std::pair<std::uint32_t, double>> pairs);

 private:
  std::int64_t lo_;
  std::int64_t hi_;
  std::shared_ptr<const SymmetricGroupTable> table_;
  std::vector<std::pair<std::uint32_t, double>> weights_;
};

HeckeElement hecke_unit(std::int64_t lo, std::int64_t hi,
                        std::uint64_t cap = kDefaultHeckeCap);
HeckeElement hecke_basis(const Permutation& w,
                         std::uint64_t cap = kDefaultHeckeCap);

// Left product with the generator of the given bond, T_s * h.
HeckeElement apply_generator(const HeckeElement& h, std::int64_t bond,
                             double Q);

// h1 * h2 in the Hecke product; both elements must live on the same
// interval.
HeckeElement multiply(const HeckeElement& h1, const HeckeElement& h2,
                      double Q);

// The involutive anti-homomorphism T_w -> T_{w^{-1}}.
HeckeElement involution(const HeckeElement& h);

// Mallows element of the interval: weights follow mallows_pmf.
HeckeElement mallows_element(std::int64_t lo, std::int64_t hi, double Q,
                             std::uint64_t cap = kDefaultHeckeCap);

// Extends an element of a subinterval by the identity elsewhere.
HeckeElement embed(const HeckeElement& h, std::int64_t lo, std::int64_t hi,
                   std::uint64_t cap = kDefaultHeckeCap);

// Law of the element built by the bond clocks up to time t: each ring
// of bond z multiplies by T_{s_z} on the left. Computed by
// uniformization of the induced chain on the group.
HeckeElement walk_law(std::int64_t lo, std::int64_t hi,
                      const SimulationParams& params, double t,
                      double tail_eps = 1e-13,
                      std::uint64_t cap = kDefaultHeckeCap);

double sup_distance(const HeckeElement& a, const HeckeElement& b);
double l1_distance(const HeckeElement& a, const HeckeElement& b);
bool is_probability_element(const HeckeElement& h, double tol = 1e-12);

struct IdentityCheckResult {
  double deviation = 0;  // sup-norm distance of the two laws
  double tolerance = 0;
  bool passed = false;
};

// Both sides of the two-block equilibration identity: evolving first
// and equilibrating afterwards against equilibrating first and
// evolving afterwards, the second side read through the involution.
// The interval is [-S-R; S+M]; the blocks are [-S-R; 0] and [-S; S+M].
IdentityCheckResult distribution_identity_check(
    std::int64_t S, std::int64_t R, std::int64_t M,
    const SimulationParams& params, double t, double tolerance = 1e-9,
    std::uint64_t cap = kDefaultHeckeCap);

struct EventProbabilityPair {
  double lhs = 0;
  double rhs = 0;
};

// The same identity evaluated on the two-threshold event: on the left
// side the positions of the low and high color blocks are constrained
// (colors in [-S-R; 0] all above position x, colors in (0; S+M] at or
// below position y), on the right side the mirrored statement about
// values at positions. Equality is the content of the identity.
EventProbabilityPair corollary_event_check(std::int64_t S, std::int64_t R,
                                           std::int64_t M,
                                           const SimulationParams& params,
                                           double t, std::int64_t x,
                                           std::int64_t y,
                                           std::uint64_t cap = kDefaultHeckeCap);

}  // namespace asep
