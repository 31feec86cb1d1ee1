#include "asep/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asep/mallows.hpp"
#include "asep/uniformization.hpp"

namespace asep {

namespace {

std::shared_ptr<const SymmetricGroupTable> table_for(std::int64_t lo,
                                                     std::int64_t hi,
                                                     std::uint64_t cap) {
  if (hi < lo) throw std::invalid_argument("empty interval");
  const std::int64_t n = hi - lo + 1;
  if (n > 10 || factorial(static_cast<int>(n)) > cap)
    throw std::invalid_argument(
        "interval too long: group order exceeds the configured cap");
  return SymmetricGroupTable::instance(static_cast<int>(n));
}

// Dense accumulator over ranks, reset through the touched list.
class DenseScratch {
 public:
  explicit DenseScratch(std::uint32_t size) : vals_(size, 0.0), used_(size, 0) {}

  void add(std::uint32_t r, double v) {
    if (!used_[r]) {
      used_[r] = 1;
      touched_.push_back(r);
    }
    vals_[r] += v;
  }

  // Moves the content into `out` (unsorted) and clears the scratch.
  void extract(std::vector<std::pair<std::uint32_t, double>>& out) {
    out.clear();
    out.reserve(touched_.size());
    for (std::uint32_t r : touched_) {
      if (vals_[r] != 0.0) out.emplace_back(r, vals_[r]);
      vals_[r] = 0.0;
      used_[r] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> vals_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> touched_;
};

using Pairs = std::vector<std::pair<std::uint32_t, double>>;

void apply_generator_inplace(Pairs& vec, int z, double Q,
                             const SymmetricGroupTable& T, DenseScratch& s) {
  for (const auto& [r, k] : vec) {
    const std::uint32_t swapped = T.bond_swap(z, r);
    if (T.length(swapped) > T.length(r)) {
      s.add(swapped, k);
    } else {
      s.add(r, (1.0 - Q) * k);
      s.add(swapped, Q * k);
    }
  }
  s.extract(vec);
}

HeckeElement multiply_left_words(const HeckeElement& h1, const HeckeElement& h2,
                                 double Q) {
  const SymmetricGroupTable& T = h1.table();
  DenseScratch step(T.size()), result(T.size());
  Pairs cur;
  for (const auto& [r1, k1] : h1.weights()) {
    cur.assign(h2.weights().begin(), h2.weights().end());
    for (int e : T.reduced_word(r1)) apply_generator_inplace(cur, e, Q, T, step);
    for (const auto& [r, k] : cur) result.add(r, k1 * k);
  }
  Pairs out;
  result.extract(out);
  HeckeElement prod(h1.lo(), h1.hi(), h1.table_ptr());
  prod.set_weights(std::move(out));
  return prod;
}

}  // namespace

HeckeElement::HeckeElement(std::int64_t lo, std::int64_t hi,
                           std::shared_ptr<const SymmetricGroupTable> table)
    : lo_(lo), hi_(hi), table_(std::move(table)) {
  if (hi_ - lo_ + 1 != table_->n())
    throw std::invalid_argument("interval does not match the group table");
}

double HeckeElement::weight(std::uint32_t rank) const {
  auto it = std::lower_bound(
      weights_.begin(), weights_.end(), rank,
      [](const auto& p, std::uint32_t r) { return p.first < r; });
  return it != weights_.end() && it->first == rank ? it->second : 0.0;
}

double HeckeElement::weight(const Permutation& w) const {
  if (w.lo != lo_) throw std::invalid_argument("wrong interval");
  return weight(table_->rank_of(w));
}

double HeckeElement::total_weight() const {
  double s = 0;
  for (const auto& [r, k] : weights_) s += k;
  return s;
}

void HeckeElement::set_weights(
    std::vector<std::pair<std::uint32_t, double>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  weights_.clear();
  for (const auto& [r, k] : pairs) {
    if (r >= table_->size()) throw std::invalid_argument("rank out of range");
    if (!weights_.empty() && weights_.back().first == r)
      weights_.back().second += k;
    else
      weights_.emplace_back(r, k);
  }
  std::erase_if(weights_, [](const auto& p) { return p.second == 0.0; });
}

HeckeElement hecke_unit(std::int64_t lo, std::int64_t hi, std::uint64_t cap) {
  HeckeElement h(lo, hi, table_for(lo, hi, cap));
  h.set_weights({{0, 1.0}});
  return h;
}

HeckeElement hecke_basis(const Permutation& w, std::uint64_t cap) {
  HeckeElement h(w.lo, w.hi(), table_for(w.lo, w.hi(), cap));
  h.set_weights({{h.table().rank_of(w), 1.0}});
  return h;
}

HeckeElement apply_generator(const HeckeElement& h, std::int64_t bond,
                             double Q) {
  if (bond < h.lo() || bond >= h.hi())
    throw std::invalid_argument("bond outside the interval");
  const SymmetricGroupTable& T = h.table();
  DenseScratch s(T.size());
  Pairs cur(h.weights());
  apply_generator_inplace(cur, static_cast<int>(bond - h.lo()), Q, T, s);
  HeckeElement out(h.lo(), h.hi(), h.table_ptr());
  out.set_weights(std::move(cur));
  return out;
}

HeckeElement involution(const HeckeElement& h) {
  const SymmetricGroupTable& T = h.table();
  Pairs pairs;
  pairs.reserve(h.support_size());
  for (const auto& [r, k] : h.weights()) pairs.emplace_back(T.inverse(r), k);
  HeckeElement out(h.lo(), h.hi(), h.table_ptr());
  out.set_weights(std::move(pairs));
  return out;
}

HeckeElement multiply(const HeckeElement& h1, const HeckeElement& h2,
                      double Q) {
  if (h1.lo() != h2.lo() || h1.hi() != h2.hi())
    throw std::invalid_argument("product needs a common interval");
  // The product can be expanded from either side; expanding from the side
  // with the shorter total word length is markedly cheaper, and the
  // anti-homomorphism turns a right expansion into a left one.
  std::uint64_t cost1 = 0, cost2 = 0;
  for (const auto& [r, k] : h1.weights()) cost1 += h1.table().length(r);
  for (const auto& [r, k] : h2.weights()) cost2 += h2.table().length(r);
  if (cost2 < cost1)
    return involution(multiply_left_words(involution(h2), involution(h1), Q));
  return multiply_left_words(h1, h2, Q);
}

HeckeElement mallows_element(std::int64_t lo, std::int64_t hi, double Q,
                             std::uint64_t cap) {
  HeckeElement h(lo, hi, table_for(lo, hi, cap));
  const SymmetricGroupTable& T = h.table();
  const int max_inv = T.n() * (T.n() - 1) / 2;
  const double z = mallows_normalizer(T.n(), Q);
  std::vector<double> q_pow(max_inv + 1);
  q_pow[0] = 1.0;
  for (int j = 1; j <= max_inv; ++j) q_pow[j] = q_pow[j - 1] * Q;
  Pairs pairs;
  for (std::uint32_t r = 0; r < T.size(); ++r) {
    const double w = q_pow[max_inv - T.length(r)] * z;
    if (w != 0.0) pairs.emplace_back(r, w);
  }
  h.set_weights(std::move(pairs));
  return h;
}

HeckeElement embed(const HeckeElement& h, std::int64_t lo, std::int64_t hi,
                   std::uint64_t cap) {
  if (lo > h.lo() || hi < h.hi())
    throw std::invalid_argument("embedding interval must contain the element's");
  HeckeElement out(lo, hi, table_for(lo, hi, cap));
  const SymmetricGroupTable& Tbig = out.table();
  const SymmetricGroupTable& Tsmall = h.table();
  const int n = Tbig.n();
  const int offset = static_cast<int>(h.lo() - lo);
  std::vector<std::uint8_t> images(n);
  Pairs pairs;
  pairs.reserve(h.support_size());
  for (const auto& [r, k] : h.weights()) {
    for (int i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
    auto im = Tsmall.perm(r);
    for (int i = 0; i < Tsmall.n(); ++i)
      images[offset + i] = static_cast<std::uint8_t>(offset + im[i]);
    pairs.emplace_back(Tbig.rank_of(images), k);
  }
  out.set_weights(std::move(pairs));
  return out;
}

HeckeElement walk_law(std::int64_t lo, std::int64_t hi,
                      const SimulationParams& params, double t,
                      double tail_eps, std::uint64_t cap) {
  if (!(t >= 0)) throw std::invalid_argument("negative time");
  HeckeElement out(lo, hi, table_for(lo, hi, cap));
  const SymmetricGroupTable& T = out.table();
  const int bonds = T.n() - 1;
  if (bonds == 0 || t == 0) {
    out.set_weights({{0, 1.0}});
    return out;
  }
  const double Q = params.Q();
  const double lambda = params.p * bonds;
  const PoissonWindow win = poisson_weights(lambda * t, tail_eps);
  std::vector<double> v(T.size(), 0.0);
  v[0] = 1.0;
  const double inv_b = 1.0 / bonds;
  auto apply_k = [&](const std::vector<double>& in, std::vector<double>& o) {
    for (std::uint32_t r = 0; r < T.size(); ++r) {
      const double w = in[r];
      if (w == 0.0) continue;
      for (int z = 0; z < bonds; ++z) {
        const std::uint32_t swapped = T.bond_swap(z, r);
        if (T.length(swapped) > T.length(r)) {
          o[swapped] += w * inv_b;
        } else {
          o[r] += (1.0 - Q) * w * inv_b;
          o[swapped] += Q * w * inv_b;
        }
      }
    }
  };
  std::vector<double> law = uniformized_mixture(std::move(v), apply_k, win);
  Pairs pairs;
  for (std::uint32_t r = 0; r < T.size(); ++r)
    if (law[r] != 0.0) pairs.emplace_back(r, law[r]);
  out.set_weights(std::move(pairs));
  return out;
}

double sup_distance(const HeckeElement& a, const HeckeElement& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi())
    throw std::invalid_argument("distance needs a common interval");
  double d = 0;
  auto ia = a.weights().begin();
  auto ib = b.weights().begin();
  while (ia != a.weights().end() || ib != b.weights().end()) {
    if (ib == b.weights().end() ||
        (ia != a.weights().end() && ia->first < ib->first)) {
      d = std::max(d, std::abs(ia->second));
      ++ia;
    } else if (ia == a.weights().end() || ib->first < ia->first) {
      d = std::max(d, std::abs(ib->second));
      ++ib;
    } else {
      d = std::max(d, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return d;
}

double l1_distance(const HeckeElement& a, const HeckeElement& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi())
    throw std::invalid_argument("distance needs a common interval");
  double d = 0;
  auto ia = a.weights().begin();
  auto ib = b.weights().begin();
  while (ia != a.weights().end() || ib != b.weights().end()) {
    if (ib == b.weights().end() ||
        (ia != a.weights().end() && ia->first < ib->first)) {
      d += std::abs(ia->second);
      ++ia;
    } else if (ia == a.weights().end() || ib->first < ia->first) {
      d += std::abs(ib->second);
      ++ib;
    } else {
      d += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return d;
}

bool is_probability_element(const HeckeElement& h, double tol) {
  double total = 0;
  for (const auto& [r, k] : h.weights()) {
    if (k < -tol) return false;
    total += k;
  }
  return std::abs(total - 1.0) <= tol;
}

IdentityCheckResult distribution_identity_check(std::int64_t S, std::int64_t R,
                                                std::int64_t M,
                                                const SimulationParams& params,
                                                double t, double tolerance,
                                                std::uint64_t cap) {
  if (S < 1 || R < 1 || M < 1) throw std::invalid_argument("need S, R, M >= 1");
  const std::int64_t lo = -S - R, hi = S + M;
  const double Q = params.Q();
  const HeckeElement W = walk_law(lo, hi, params, t, 1e-13, cap);
  const HeckeElement m_low = embed(mallows_element(-S - R, 0, Q, cap), lo, hi, cap);
  const HeckeElement m_high = embed(mallows_element(-S, S + M, Q, cap), lo, hi, cap);
  const HeckeElement lhs = multiply(multiply(W, m_low, Q), m_high, Q);
  const HeckeElement rhs =
      involution(multiply(m_high, multiply(m_low, W, Q), Q));
  IdentityCheckResult res;
  res.deviation = sup_distance(lhs, rhs);
  res.tolerance = tolerance;
  res.passed = res.deviation <= tolerance;
  return res;
}

EventProbabilityPair corollary_event_check(std::int64_t S, std::int64_t R,
                                           std::int64_t M,
                                           const SimulationParams& params,
                                           double t, std::int64_t x,
                                           std::int64_t y, std::uint64_t cap) {
  if (S < 1 || R < 1 || M < 1) throw std::invalid_argument("need S, R, M >= 1");
  const std::int64_t lo = -S - R, hi = S + M;
  const double Q = params.Q();
  const HeckeElement W = walk_law(lo, hi, params, t, 1e-13, cap);
  const HeckeElement m_low = embed(mallows_element(-S - R, 0, Q, cap), lo, hi, cap);
  const HeckeElement m_high = embed(mallows_element(-S, S + M, Q, cap), lo, hi, cap);
  const HeckeElement lhs_law = multiply(multiply(W, m_low, Q), m_high, Q);
  const HeckeElement rhs_law = multiply(m_high, multiply(m_low, W, Q), Q);
  const SymmetricGroupTable& T = lhs_law.table();
  const int n = T.n();

  EventProbabilityPair out;
  // Left side: constrain positions of the color blocks, read off the
  // inverse permutation.
  for (const auto& [r, k] : lhs_law.weights()) {
    auto inv_im = T.perm(T.inverse(r));
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      const std::int64_t color = lo + c;
      const std::int64_t pos = lo + inv_im[c];
      if (color <= 0 && pos <= x) ok = false;
      if (color > 0 && pos > y) ok = false;
    }
    if (ok) out.lhs += k;
  }
  // Right side: the same constraint on values at positions.
  for (const auto& [r, k] : rhs_law.weights()) {
    auto im = T.perm(r);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const std::int64_t pos = lo + i;
      const std::int64_t value = lo + im[i];
      if (pos <= 0 && value <= x) ok = false;
      if (pos > 0 && value > y) ok = false;
    }
    if (ok) out.rhs += k;
  }
  return out;
}

}  // namespace asep
