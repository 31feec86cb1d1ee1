#include "asep/uniformization.hpp"

#include <cmath>
#include <stdexcept>

namespace asep {

double PoissonWindow::captured() const {
  double s = 0;
  for (double w : weights) s += w;
  return s;
}

PoissonWindow poisson_weights(double lambda_t, double tail_eps) {
  if (!(lambda_t >= 0) || !(tail_eps > 0) || !(tail_eps < 1))
    throw std::invalid_argument("need lambda_t >= 0 and tail_eps in (0, 1)");
  PoissonWindow win;
  if (lambda_t == 0) {
    win.m_lo = 0;
    win.weights = {1.0};
    return win;
  }
  auto log_pmf = [lambda_t](std::int64_t m) {
    return -lambda_t + static_cast<double>(m) * std::log(lambda_t) -
           std::lgamma(static_cast<double>(m) + 1.0);
  };
  // Grow greedily around the mode until the captured mass suffices.
  std::int64_t a = static_cast<std::int64_t>(lambda_t);
  std::int64_t b = a;
  double mass = std::exp(log_pmf(a));
  double left = a > 0 ? std::exp(log_pmf(a - 1)) : 0.0;
  double right = std::exp(log_pmf(b + 1));
  while (mass < 1.0 - tail_eps) {
    if (left == 0.0 && right == 0.0) break;  // double precision exhausted
    if (left >= right && a > 0) {
      mass += left;
      --a;
      left = a > 0 ? std::exp(log_pmf(a - 1)) : 0.0;
    } else {
      mass += right;
      ++b;
      right = std::exp(log_pmf(b + 1));
    }
  }
  win.m_lo = a;
  win.weights.resize(b - a + 1);
  for (std::int64_t m = a; m <= b; ++m) win.weights[m - a] = std::exp(log_pmf(m));
  return win;
}

}  // namespace asep
