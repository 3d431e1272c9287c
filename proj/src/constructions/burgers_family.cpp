#include "displab/constructions/burgers_family.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/constructions/carrier_grid.hpp"
#include "displab/spectral/ops.hpp"

namespace displab {

void validate(const BurgersFamilyParams& p) {
  if (p.lambda < 8.0)
    throw std::invalid_argument("burgers family: lambda must be >= 8");
  if (!(p.delta > 1.0 && p.delta < 2.0))
    throw std::invalid_argument("burgers family: delta must lie in (1, 2)");
  if (!(p.s > 1.5))
    throw std::invalid_argument("burgers family: s must exceed 3/2");
  if (p.phi_tilde.inner < p.phi.outer)
    throw std::invalid_argument(
        "burgers family: phi_tilde must be 1 on the support of phi");
}

Grid1D burgers_grid(const BurgersFamilyParams& p, double points_per_wavelength) {
  validate(p);
  const double halfwidth = p.phi_tilde.outer * std::pow(p.lambda, p.delta);
  return carrier_grid(p.lambda, halfwidth, 1.5, points_per_wavelength);
}

Field1D burgers_approx(const BurgersFamilyParams& p, const Grid1D& g, double t) {
  validate(p);
  const double scale = std::pow(p.lambda, p.delta);
  require_carrier_resolved(g, p.lambda, p.phi_tilde.outer * scale);
  const double amp_low = p.omega / p.lambda;
  const double amp_high = std::pow(p.lambda, -0.5 * p.delta - p.s);
  const double mid = 0.5 * g.length;
  return sample(g, [&](double x) {
    const double y = x - mid;
    return amp_low * p.phi_tilde.value(y / scale) +
           amp_high * p.phi.value(y / scale) *
               std::cos(p.lambda * y - p.omega * t);
  });
}

ResidualReport burgers_residual(const BurgersFamilyParams& p, const Grid1D& g,
                                double t) {
  validate(p);
  const double scale = std::pow(p.lambda, p.delta);
  require_carrier_resolved(g, p.lambda, p.phi_tilde.outer * scale);
  const double amp_low = p.omega / p.lambda;
  const double amp_high = std::pow(p.lambda, -0.5 * p.delta - p.s);
  const double mid = 0.5 * g.length;

  const Field1D u_low = sample(g, [&](double x) {
    return amp_low * p.phi_tilde.value((x - mid) / scale);
  });
  const Field1D u_high = sample(g, [&](double x) {
    const double y = x - mid;
    return amp_high * p.phi.value(y / scale) *
           std::cos(p.lambda * y - p.omega * t);
  });
  // dt u_h analytically: the cos argument differentiates to +omega sin.
  const Field1D dt_high = sample(g, [&](double x) {
    const double y = x - mid;
    return p.omega * amp_high * p.phi.value(y / scale) *
           std::sin(p.lambda * y - p.omega * t);
  });

  const Field1D dx_low = derivative(u_low);
  const Field1D dx_high = derivative(u_high);

  Field1D pair = dt_high + pointwise_mul(u_low, dx_high);
  Field1D high_low = pointwise_mul(u_high, dx_low);
  Field1D high_high = pointwise_mul(u_high, dx_high);
  Field1D low_low = pointwise_mul(u_low, dx_low);

  ResidualReport rep;
  rep.scale = p.lambda;
  rep.term_names = {"transport_pair", "high_dx_low", "high_dx_high",
                    "low_dx_low"};
  rep.term_l2 = {l2_norm(pair), l2_norm(high_low), l2_norm(high_high),
                 l2_norm(low_low)};
  rep.total_l2 = l2_norm(pair + high_low + high_high + low_low);
  rep.predicted = std::pow(p.lambda, -p.s);
  return rep;
}

}  // namespace displab
