#include "asep/fredholm.hpp"

#include <cmath>
#include <stdexcept>

#include "asep/airy.hpp"
#include "asep/quadrature.hpp"

namespace asep {

namespace {

double kernel_from(const AiryValue& a, double x, const AiryValue& b, double y) {
  if (std::abs(x - y) < 1e-6) {
    const double m = 0.5 * (x + y);
    const AiryValue v = airy(m);
    return v.aip * v.aip - m * v.ai * v.ai;
  }
  return (a.ai * b.aip - b.ai * a.aip) / (x - y);
}

struct MappedRule {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<AiryValue> av;
};

MappedRule mapped_rule(double s, int m, const QuadratureSpec& quad) {
  if (m < 4) throw std::invalid_argument("quadrature: m < 4");
  if (s >= quad.arg_limit)
    throw std::invalid_argument("quadrature: s beyond the mapped range");
  GaussLegendre gl = gauss_legendre_on(m, 0.0, 1.0);
  const double u_min = gl.nodes.front();
  const double beta =
      std::min(quad.beta_max, (quad.arg_limit - s) / (-std::log(u_min)));
  MappedRule r;
  r.x.resize(m);
  r.w.resize(m);
  r.av.resize(m);
  for (int i = 0; i < m; ++i) {
    const double u = gl.nodes[i];
    r.x[i] = s - beta * std::log(u);
    r.w[i] = gl.weights[i] * beta / u;
    r.av[i] = airy(r.x[i]);
  }
  return r;
}

// Determinant by in-place elimination with partial pivoting.
double dense_det(std::vector<double>& a, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (int j = c + 1; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

}  // namespace

double airy_kernel(double x, double y) {
  if (std::abs(x - y) < 1e-6) {
    const double m = 0.5 * (x + y);
    const AiryValue v = airy(m);
    return v.aip * v.aip - m * v.ai * v.ai;
  }
  const AiryValue a = airy(x), b = airy(y);
  return (a.ai * b.aip - b.ai * a.aip) / (x - y);
}

NystromSystem build_nystrom(double s, const QuadratureSpec& quad) {
  const MappedRule r = mapped_rule(s, quad.m, quad);
  const int m = quad.m;
  NystromSystem sys;
  sys.x = r.x;
  sys.w = r.w;
  sys.kernel.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double v = std::sqrt(r.w[i] * r.w[j]) *
                       kernel_from(r.av[i], r.x[i], r.av[j], r.x[j]);
      if (!std::isfinite(v)) throw std::runtime_error("quadrature failure");
      sys.kernel[static_cast<std::size_t>(i) * m + j] = v;
      sys.kernel[static_cast<std::size_t>(j) * m + i] = v;
    }
  }
  return sys;
}

double f_gue(double s, const QuadratureSpec& quad) {
  NystromSystem sys = build_nystrom(s, quad);
  const int m = quad.m;
  std::vector<double> a(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[static_cast<std::size_t>(i) * m + j] =
          (i == j ? 1.0 : 0.0) - sys.kernel[static_cast<std::size_t>(i) * m + j];
  return dense_det(a, m);
}

std::vector<double> f_gue_series_terms(double s, int max_terms,
                                       const QuadratureSpec& quad) {
  if (max_terms < 0 || max_terms > 4)
    throw std::invalid_argument("f_gue_series: max_terms must be in [0, 4]");
  std::vector<double> terms{1.0};
  static const int per_dim[5] = {0, 0, 40, 24, 14};
  double factorial = 1.0;
  for (int n = 1; n <= max_terms; ++n) {
    const int mn = n == 1 ? quad.m : std::min(quad.m, per_dim[n]);
    const MappedRule r = mapped_rule(s, mn, quad);
    factorial *= n;
    double integral = 0.0;
    std::vector<int> idx(n, 0);
    std::vector<double> sub(static_cast<std::size_t>(n) * n);
    while (true) {
      double wprod = 1.0;
      for (int d = 0; d < n; ++d) wprod *= r.w[idx[d]];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          sub[static_cast<std::size_t>(a) * n + b] =
              idx[a] == idx[b]
                  ? r.av[idx[a]].aip * r.av[idx[a]].aip -
                        r.x[idx[a]] * r.av[idx[a]].ai * r.av[idx[a]].ai
                  : kernel_from(r.av[idx[a]], r.x[idx[a]], r.av[idx[b]],
                                r.x[idx[b]]);
      integral += wprod * dense_det(sub, n);
      int d = n - 1;
      while (d >= 0 && ++idx[d] == mn) idx[d--] = 0;
      if (d < 0) break;
    }
    const double sign = n % 2 ? -1.0 : 1.0;
    terms.push_back(sign * integral / factorial);
  }
  return terms;
}

double f_gue_series(double s, int max_terms, const QuadratureSpec& quad) {
  double total = 0;
  for (double t : f_gue_series_terms(s, max_terms, quad)) total += t;
  return total;
}

}  // namespace asep
