#include "displab/sphere/highest_weight.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/sphere/gauss_legendre.hpp"

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// integral_{-1}^{1} (1 - x^2)^n dx by Gauss-Legendre, exact for the sizes
// used here.
double band_integral(const GaussLegendre& q, int n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i)
    acc += q.w[i] * std::pow((1.0 - q.x[i]) * (1.0 + q.x[i]), n);
  return acc;
}

}  // namespace

void validate(const HighestWeightParams& p) {
  if (p.n < 1)
    throw std::invalid_argument("highest weight: n must be a positive integer");
  if (!(p.s > 0.125 && p.s < 0.25))
    throw std::invalid_argument("highest weight: s must lie in (1/8, 1/4)");
  if (!(p.kappa > 0.0 && p.kappa <= 1.0))
    throw std::invalid_argument("highest weight: kappa must lie in (0, 1]");
  if (!(p.beta > 0.0 && p.beta < 1.0))
    throw std::invalid_argument("highest weight: beta must lie in (0, 1)");
}

SphereField highest_weight(const SphereGrid& g, int n) {
  if (n < 1)
    throw std::invalid_argument("highest weight: n must be a positive integer");
  if (3 * static_cast<std::size_t>(n) > g.bandwidth)
    throw std::invalid_argument(
        "highest weight: grid bandwidth below 3n, cubes would not resolve");
  return sample_sphere(g, [n](double, double st, double phi) {
    return std::pow(st, n) * std::exp(cplx(0.0, n * phi));
  });
}

SphereField scaled_highest_weight(const SphereGrid& g, int n, double s,
                                  double amplitude) {
  SphereField u = highest_weight(g, n);
  const double a = amplitude * std::pow(static_cast<double>(n), 0.25 - s);
  for (cplx& z : u.v) z *= a;
  return u;
}

double psi_l2_sq(int n) {
  if (n < 0) throw std::invalid_argument("psi_l2_sq: n must be >= 0");
  const double nd = static_cast<double>(n);
  return 2.0 * kPi *
         std::exp((2.0 * nd + 1.0) * std::log(2.0) +
                  2.0 * std::lgamma(nd + 1.0) - std::lgamma(2.0 * nd + 2.0));
}

double omega_n(int n, double s) {
  if (n < 1) throw std::invalid_argument("omega_n: n must be a positive integer");
  // ||psi_n||_4^4 / ||psi_n||_2^2 needs degree 4n; 2n+2 nodes are exact.
  const GaussLegendre q = gauss_legendre(2 * static_cast<std::size_t>(n) + 2);
  const double ratio = band_integral(q, 2 * n) / band_integral(q, n);
  return std::pow(static_cast<double>(n), 0.5 - 2.0 * s) * ratio;
}

CubicDecomposition cubic_decompose(const SphereGrid& g, int n, double s) {
  SphereField phi = scaled_highest_weight(g, n, s, 1.0);
  SphereField cube(g);
  for (std::size_t j = 0; j < phi.v.size(); ++j)
    cube.v[j] = std::norm(phi.v[j]) * phi.v[j];

  const SphereTransform sht(g);
  const HarmonicCoeffs phic = sht.forward(phi);
  HarmonicCoeffs c = sht.forward(cube);

  const std::size_t ln = static_cast<std::size_t>(n);
  const cplx lead = phic.at(ln, n);
  if (std::abs(lead) == 0.0)
    throw std::invalid_argument("cubic decompose: degenerate family member");

  CubicDecomposition out;
  out.omega = (c.at(ln, n) / lead).real();
  c.at(ln, n) -= out.omega * lead;
  out.remainder = std::move(c);

  double low = 0.0, peak = 0.0;
  for (const cplx& z : out.remainder.c) peak = std::max(peak, std::abs(z));
  peak = std::max(peak, std::abs(out.omega * lead));
  for (std::size_t l = 0; l <= ln; ++l)
    for (long m = -static_cast<long>(l); m <= static_cast<long>(l); ++m)
      low = std::max(low, std::abs(out.remainder.at(l, m)));
  out.low_degree_residual = peak > 0.0 ? low / peak : 0.0;
  return out;
}

}  // namespace displab
