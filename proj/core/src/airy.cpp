#include "asep/airy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asep {

namespace detail {

namespace {

constexpr long double kAi0 = 0.35502805388781723926006318600418L;
constexpr long double kAip0 = -0.25881940379280679840518356018920L;
constexpr long double kPi = 3.14159265358979323846264338327950L;

}  // namespace

AiryValue airy_series(double xd) {
  const long double x = xd;
  if (x == 0.0L) return {static_cast<double>(kAi0), static_cast<double>(kAip0)};
  const long double x3 = x * x * x;
  // Ai = Ai(0) F + Ai'(0) G with F'' = xF, F(0)=1, F'(0)=0 and
  // G'' = xG, G(0)=0, G'(0)=1. Terms up to k=1 seed the recurrences.
  long double tf = x3 / 6.0L, f = 1.0L + tf;
  long double tg = x * x3 / 12.0L, g = x + tg;
  long double tfp = x * x / 2.0L, fp = tfp;
  long double tgp = x3 / 3.0L, gp = 1.0L + tgp;
  for (int k = 2; k < 300; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    tfp *= x3 / ((3.0L * k - 1.0L) * (3.0L * k - 3.0L));
    tgp *= x3 / ((3.0L * k - 2.0L) * (3.0L * k));
    f += tf;
    g += tg;
    fp += tfp;
    gp += tgp;
    const long double m = std::max(std::max(std::fabs(tf), std::fabs(tg)),
                                   std::max(std::fabs(tfp), std::fabs(tgp)));
    if (m < 1e-24L &&
        (3.0L * k) * (3.0L * k) * (3.0L * k + 1.0L) > std::fabs(x3))
      break;
  }
  return {static_cast<double>(kAi0 * f + kAip0 * g),
          static_cast<double>(kAi0 * fp + kAip0 * gp)};
}

AiryValue airy_asymptotic(double xd) {
  const long double t = std::fabs(static_cast<long double>(xd));
  const long double zeta = (2.0L / 3.0L) * t * std::sqrt(t);
  // u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)),
  // v_k = u_k (6k+1)/(1-6k). Truncated at the smallest term.
  constexpr int kMax = 64;
  long double tu[kMax], tv[kMax];
  long double u = 1.0L;
  long double zp = 1.0L;
  int count = 0;
  long double prev_mag = 1e400L;
  for (int k = 0; k < kMax; ++k) {
    const long double v =
        k == 0 ? 1.0L : u * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
    const long double mag = u / zp;
    if (std::fabs(mag) > prev_mag) break;
    prev_mag = std::fabs(mag);
    tu[count] = mag;
    tv[count] = v / zp;
    ++count;
    u *= (6.0L * k + 1.0L) * (6.0L * k + 3.0L) * (6.0L * k + 5.0L) /
         (216.0L * (k + 1.0L) * (2.0L * k + 1.0L));
    zp *= zeta;
  }
  const long double root4 = std::pow(t, 0.25L);
  if (xd > 0) {
    long double su = 0.0L, sv = 0.0L;
    long double sign = 1.0L;
    for (int k = 0; k < count; ++k, sign = -sign) {
      su += sign * tu[k];
      sv += sign * tv[k];
    }
    const long double pre = std::exp(-zeta) / (2.0L * std::sqrt(kPi));
    return {static_cast<double>(pre / root4 * su),
            static_cast<double>(-pre * root4 * sv)};
  }
  long double ue = 0.0L, uo = 0.0L, ve = 0.0L, vo = 0.0L;
  long double sign = 1.0L;
  for (int k = 0; k + 1 < count; k += 2, sign = -sign) {
    ue += sign * tu[k];
    uo += sign * tu[k + 1];
    ve += sign * tv[k];
    vo += sign * tv[k + 1];
  }
  const long double w = zeta - kPi / 4.0L;
  const long double c = std::cos(w), s = std::sin(w);
  const long double rp = 1.0L / std::sqrt(kPi);
  return {static_cast<double>(rp / root4 * (c * ue + s * uo)),
          static_cast<double>(rp * root4 * (s * ve - c * vo))};
}

}  // namespace detail

AiryValue airy(double x) {
  if (!(std::abs(x) <= 20.0))
    throw std::domain_error("airy: argument outside the range |x| <= 20");
  return std::abs(x) < 8.0 ? detail::airy_series(x) : detail::airy_asymptotic(x);
}

}  // namespace asep
