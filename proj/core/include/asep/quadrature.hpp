#pragma once

#include <vector>

namespace asep {

// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
// 2m - 1. Nodes ascend.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int m);

// The same rule affinely mapped to [a, b].
GaussLegendre gauss_legendre_on(int m, double a, double b);

}  // namespace asep
