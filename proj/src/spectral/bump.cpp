#include "displab/spectral/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Polynomial smoothstep S(t) = int_0^t s^10 (1-s)^10 ds / B(11,11),
// descending from the expansion of (1-s)^10; C^10 at both ends.
// The alternating series cancels badly as t -> 1 (the sum shrinks from
// O(1) terms to B(11,11) ~ 2.6e-7, costing eight digits), which would put
// a ~1e-9 noise floor on every sampled bump.  The integrand is symmetric
// about s = 1/2, so fold with S(t) = 1 - S(1-t) and keep t <= 1/2.
double poly_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (t > 0.5) return 1.0 - poly_step(1.0 - t);
  // binomial(10,k), alternating
  static const double binom[11] = {1,  -10, 45,  -120, 210, -252,
                                   210, -120, 45, -10,  1};
  double acc = 0.0;
  double tk = std::pow(t, 11);
  for (int k = 0; k <= 10; ++k) {
    acc += binom[k] * tk / static_cast<double>(11 + k);
    tk *= t;
  }
  // 1/B(11,11) = 21!/(10!)^2 / 11 ... easier: B(11,11) = 10!^2/21!
  const double beta = std::exp(2.0 * std::lgamma(11.0) - std::lgamma(22.0));
  return acc / beta;
}

double taper(BumpKind kind, double u) {
  // u in [0,1]: 0 -> plateau edge (value 1), 1 -> support edge (value 0)
  switch (kind) {
    case BumpKind::kCompactPolynomial:
      return poly_step(1.0 - u);
    case BumpKind::kCosineTaper: {
      const double c = std::cos(0.5 * kPi * u);
      return c * c;
    }
    case BumpKind::kGaussianTruncated: {
      const double e9 = std::exp(-9.0);
      return (std::exp(-9.0 * u * u) - e9) / (1.0 - e9);
    }
  }
  return 0.0;
}

}  // namespace

double BumpProfile::value(double x) const {
  const double a = std::fabs(x);
  if (a <= inner) return 1.0;
  if (a >= outer) return 0.0;
  return taper(kind, (a - inner) / (outer - inner));
}

double BumpProfile::l2_norm() const {
  // Simpson over one transition zone, doubled, plus the plateau.
  const int m = 4096;  // even
  const double h = (outer - inner) / m;
  double acc = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double f = value(inner + j * h);
    const double w = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    acc += w * f * f;
  }
  acc *= h / 3.0;
  return std::sqrt(2.0 * inner + 2.0 * acc);
}

std::string BumpProfile::kind_name() const {
  switch (kind) {
    case BumpKind::kCompactPolynomial: return "compact-polynomial";
    case BumpKind::kCosineTaper: return "cosine-taper";
    case BumpKind::kGaussianTruncated: return "gaussian-truncated";
  }
  return "?";
}

BumpProfile make_bump(BumpKind kind, double inner, double outer) {
  if (!(0.0 <= inner && inner < outer))
    throw std::invalid_argument("bump radii must satisfy 0 <= inner < outer");
  return BumpProfile{kind, inner, outer};
}

double smooth_cutoff(double t) {
  const double a = std::fabs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  // h(s) = exp(-1/s) glue; C^infinity partition between 1 and 2.
  const double up = std::exp(-1.0 / (2.0 - a));
  const double dn = std::exp(-1.0 / (a - 1.0));
  return up / (up + dn);
}

}  // namespace displab
