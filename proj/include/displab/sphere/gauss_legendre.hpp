#pragma once
// Gauss-Legendre quadrature on [-1, 1].
//
// Nodes are the roots of the Legendre polynomial P_m found by Newton
// iteration; weights are 2 / ((1 - x^2) P_m'(x)^2).  Only the negative half
// is iterated and the rest mirrored, so the rule is symmetric bit for bit.

#include <cstddef>
#include <vector>

namespace displab {

struct GaussLegendre {
  std::vector<double> x;  // nodes, ascending in (-1, 1)
  std::vector<double> w;  // weights, sum to 2
};

GaussLegendre gauss_legendre(std::size_t m);

}  // namespace displab
