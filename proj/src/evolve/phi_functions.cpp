#include "displab/evolve/phi_functions.hpp"

#include <cmath>

namespace displab {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// phi_k = sum_{m>=0} z^m / (m+k)!  truncated where the tail is below eps.
cplx taylor(cplx z, int k) {
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  cplx term(1.0 / fact, 0.0);
  cplx acc = term;
  for (int m = 1; m <= 10; ++m) {
    term *= z / static_cast<double>(m + k);
    acc += term;
  }
  return acc;
}

cplx direct(cplx z, int k) {
  const cplx e = std::exp(z);
  switch (k) {
    case 1:
      return (e - 1.0) / z;
    case 2:
      return (e - 1.0 - z) / (z * z);
    default:
      return (e - 1.0 - z - 0.5 * z * z) / (z * z * z);
  }
}

// Mean of the direct formula over a circle of radius 2 about z.  phi_k is
// entire, so the mean equals phi_k(z) and every sample sits at distance >= 1
// from the origin where the direct formula is well conditioned.
cplx circle_mean(cplx z, int k) {
  constexpr int m = 32;
  cplx acc(0.0, 0.0);
  for (int j = 0; j < m; ++j) {
    const double th = 2.0 * kPi * (j + 0.5) / m;
    acc += direct(z + 2.0 * cplx(std::cos(th), std::sin(th)), k);
  }
  return acc / static_cast<double>(m);
}

cplx eval(cplx z, int k) {
  const double a = std::abs(z);
  if (a < 1e-2) return taylor(z, k);
  if (a <= 1.0) return circle_mean(z, k);
  return direct(z, k);
}

}  // namespace

cplx phi1(cplx z) { return eval(z, 1); }
cplx phi2(cplx z) { return eval(z, 2); }
cplx phi3(cplx z) { return eval(z, 3); }

}  // namespace displab
