#pragma once

#include <cstdint>

#include "asep/fredholm.hpp"
#include "asep/params.hpp"

namespace asep {

// (alpha (1-alpha))^{1/6} / (sqrt(alpha) + sqrt(1-alpha))^{4/3},
// the slope of the profile in the rescaled coordinate.
double f_alpha(double alpha);

// ((sqrt(k) + sqrt(N-k))^2 + c N^{1/3}) / (p - q).
double g_time(std::int64_t N, std::int64_t k, double c, double p, double q);
double g_time(std::int64_t N, std::int64_t k, double c,
              const SimulationParams& params);

// Centering and fluctuation constants for the tagged particle of the
// step configuration: with T = (p-q) t and sigma = m / T,
//   x_m(t) ~ c1 T - c2 T^{1/3} X,  X Tracy-Widom distributed.
struct StepScaling {
  double gamma = 0;
  double sigma = 0;
  double c1 = 0;
  double c2 = 0;
};

// scaled_time is (p-q) times the real time.
StepScaling step_scaling(double m, double scaled_time, double gamma);

// Packages the rescaled tagged-particle event: particle index
// k + cp N^kappa, position threshold N - 2k + cpp N^kappap, and the
// predicted limit 1 - F_GUE(c f(k/N)), together with the intermediate
// quantities of the change of variables for diagnostics. The ratio
// field converges to f_alpha(k/N) as N grows.
struct CorollaryRescale {
  double particle_index = 0;
  double position_threshold = 0;
  double predicted = 0;
  double a = 0;        // k / N
  double D = 0;        // (sqrt(a) + sqrt(1-a))^2
  double N_tilde = 0;  // D N + c N^{1/3} = g(k, c) (p - q)
  double sigma = 0;    // particle_index / N_tilde
  double c1 = 0;
  double c2 = 0;
  double ratio = 0;
};

CorollaryRescale corollary_rescale(std::int64_t N, std::int64_t k, double c,
                                   double p, double q, double kappa, double cp,
                                   double kappap, double cpp,
                                   const QuadratureSpec& quad = {});

}  // namespace asep
