#pragma once

namespace asep {

struct AiryValue {
  double ai = 0;
  double aip = 0;
};

// Ai and Ai' with absolute error below 1e-10 on |x| <= 20 (the
// documented range; out of range throws). Maclaurin series below
// |x| = 8, asymptotic expansions beyond.
AiryValue airy(double x);

inline double airy_ai(double x) { return airy(x).ai; }
inline double airy_ai_prime(double x) { return airy(x).aip; }

namespace detail {
// The two branches, exposed so the overlap window can be tested.
AiryValue airy_series(double x);
AiryValue airy_asymptotic(double x);
}  // namespace detail

}  // namespace asep
