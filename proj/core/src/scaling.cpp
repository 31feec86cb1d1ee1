#include "asep/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace asep {

double f_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("f_alpha: alpha must lie in (0, 1)");
  return std::pow(alpha * (1.0 - alpha), 1.0 / 6.0) /
         std::pow(std::sqrt(alpha) + std::sqrt(1.0 - alpha), 4.0 / 3.0);
}

double g_time(std::int64_t N, std::int64_t k, double c, double p, double q) {
  if (k < 1 || k > N) throw std::invalid_argument("g_time: need 1 <= k <= N");
  if (!(p > q)) throw std::invalid_argument("g_time: need p > q");
  const double root = std::sqrt(static_cast<double>(k)) +
                      std::sqrt(static_cast<double>(N - k));
  return (root * root + c * std::cbrt(static_cast<double>(N))) / (p - q);
}

double g_time(std::int64_t N, std::int64_t k, double c,
              const SimulationParams& params) {
  return g_time(N, k, c, params.p, params.q());
}

StepScaling step_scaling(double m, double scaled_time, double gamma) {
  StepScaling s;
  s.gamma = gamma;
  s.sigma = m / scaled_time;
  if (!(s.sigma > 0.0 && s.sigma < 1.0))
    throw std::invalid_argument("step_scaling: sigma must lie in (0, 1)");
  const double r = std::sqrt(s.sigma);
  s.c1 = 1.0 - 2.0 * r;
  s.c2 = std::pow(s.sigma, -1.0 / 6.0) * std::pow(1.0 - r, 2.0 / 3.0);
  return s;
}

CorollaryRescale corollary_rescale(std::int64_t N, std::int64_t k, double c,
                                   double p, double q, double kappa, double cp,
                                   double kappap, double cpp,
                                   const QuadratureSpec& quad) {
  if (!(kappa >= 0.0 && kappa < 1.0 / 3.0) ||
      !(kappap >= 0.0 && kappap < 1.0 / 3.0))
    throw std::invalid_argument(
        "corollary_rescale: exponents must lie in [0, 1/3)");
  if (k < 1 || k >= N) throw std::invalid_argument("corollary_rescale: k range");
  if (!(p > q)) throw std::invalid_argument("corollary_rescale: need p > q");
  CorollaryRescale r;
  const double dn = static_cast<double>(N);
  r.a = static_cast<double>(k) / dn;
  const double rootD = std::sqrt(r.a) + std::sqrt(1.0 - r.a);
  r.D = rootD * rootD;
  r.N_tilde = r.D * dn + c * std::cbrt(dn);
  r.particle_index = static_cast<double>(k) + cp * std::pow(dn, kappa);
  r.position_threshold =
      dn - 2.0 * static_cast<double>(k) + cpp * std::pow(dn, kappap);
  const StepScaling ss = step_scaling(r.particle_index, r.N_tilde, p - q);
  r.sigma = ss.sigma;
  r.c1 = ss.c1;
  r.c2 = ss.c2;
  const double numer = (1.0 - 2.0 * r.a) / std::pow(r.D, 4.0 / 3.0) +
                       std::sqrt(r.a) / std::pow(r.D, 5.0 / 6.0);
  r.ratio = numer / r.c2;
  r.predicted = 1.0 - f_gue(c * f_alpha(r.a), quad);
  return r;
}

}  // namespace asep
