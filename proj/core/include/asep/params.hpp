#pragma once

#include <stdexcept>

namespace asep {

// Asymmetric jump rates: right at rate p, left at rate q = 1 - p,
// with p in (1/2, 1]. Q = q/p in [0, 1) is the coin bias used by the
// graphical construction.
struct SimulationParams {
  double p = 1.0;

  double q() const { return 1.0 - p; }
  double Q() const { return (1.0 - p) / p; }

  static SimulationParams from_p(double p) {
    if (!(p > 0.5) || !(p <= 1.0))
      throw std::invalid_argument("rate p must lie in (1/2, 1]");
    return SimulationParams{p};
  }

  static SimulationParams from_Q(double Q) {
    if (!(Q >= 0.0) || !(Q < 1.0))
      throw std::invalid_argument("asymmetry Q must lie in [0, 1)");
    return SimulationParams{1.0 / (1.0 + Q)};
  }
};

}  // namespace asep
