#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace asep {

// Poisson(lambda_t) weights restricted to a window that captures all
// but at most tail_eps of the mass. Weights are computed through
// lgamma so large lambda_t cannot underflow the recurrence start.
struct PoissonWindow {
  std::int64_t m_lo = 0;
  std::vector<double> weights;  // weights[i] = P(M = m_lo + i)
  std::int64_t m_hi() const {
    return m_lo + static_cast<std::int64_t>(weights.size()) - 1;
  }
  double captured() const;
};

PoissonWindow poisson_weights(double lambda_t, double tail_eps);

// sum_m w_m K^m v for a stochastic kernel given as an apply callback.
// The iterates below the window still have to be formed, only their
// weights vanish.
template <class ApplyK>
std::vector<double> uniformized_mixture(std::vector<double> v,
                                        ApplyK&& apply_k,
                                        const PoissonWindow& win) {
  std::vector<double> result(v.size(), 0.0);
  std::vector<double> next(v.size(), 0.0);
  for (std::int64_t m = 0; m <= win.m_hi(); ++m) {
    if (m >= win.m_lo) {
      const double w = win.weights[m - win.m_lo];
      for (std::size_t i = 0; i < v.size(); ++i) result[i] += w * v[i];
    }
    if (m < win.m_hi()) {
      std::fill(next.begin(), next.end(), 0.0);
      apply_k(v, next);
      v.swap(next);
    }
  }
  return result;
}

}  // namespace asep
