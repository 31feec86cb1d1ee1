#pragma once

#include <vector>

namespace asep {

// Nodes for det(I - K) on L^2(s, infinity): Gauss-Legendre points u in
// (0, 1) pushed through x = s - beta log(u), with beta capped so no
// mapped node leaves the Airy accuracy range.
struct QuadratureSpec {
  int m = 60;
  double beta_max = 2.0;
  double arg_limit = 19.5;
};

// (Ai(x)Ai'(y) - Ai(y)Ai'(x)) / (x - y), continued across the diagonal
// by Ai'(x)^2 - x Ai(x)^2.
double airy_kernel(double x, double y);

struct NystromSystem {
  std::vector<double> x;       // mapped nodes
  std::vector<double> w;       // mapped weights, all positive
  std::vector<double> kernel;  // m x m row-major, sqrt(w_i w_j) K(x_i, x_j)
};

NystromSystem build_nystrom(double s, const QuadratureSpec& quad = {});

// F_GUE(s) = det(I - K) via the Nystrom matrix and pivoted elimination.
double f_gue(double s, const QuadratureSpec& quad = {});

// Alternating-series form: 1 + sum_{n>=1} (-1)^n / n! times the
// n-dimensional integral of det[K(x_i, x_j)], each integral by a
// tensorized mapped rule. Independent oracle for f_gue; max_terms <= 4.
double f_gue_series(double s, int max_terms, const QuadratureSpec& quad = {});

// The individual terms of that series, term 0 being 1.
std::vector<double> f_gue_series_terms(double s, int max_terms,
                                       const QuadratureSpec& quad = {});

}  // namespace asep
