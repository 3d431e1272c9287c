#include "displab/evolve/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/spectral/ops.hpp"

namespace displab {
namespace {

// integral of u^2 from a coefficient snapshot (real state assumed, so this
// is the Parseval sum).
double square_integral(const std::vector<cplx>& c, double length) {
  double acc = 0.0;
  for (const cplx& z : c) acc += std::norm(z);
  return length * acc;
}

}  // namespace

double gauge_speed(const Field1D& u) {
  double acc = 0.0;
  for (const cplx& z : u.v) {
    const double r = z.real();
    acc += r * r;
  }
  return acc / static_cast<double>(u.grid.n);
}

Field1D mkdv_to_gauged(const Field1D& v, double t) {
  // u(x) = v(x + c t), i.e. a left translation by c t.
  return spectral_shift(v, -gauge_speed(v) * t);
}

Field1D gauged_to_mkdv(const Field1D& u, double t) {
  return spectral_shift(u, gauge_speed(u) * t);
}

Trajectory gauge_transform_mkdv(const Trajectory& traj, GaugeDirection dir) {
  if (std::fabs(traj.grid.length - 1.0) > 1e-12)
    throw std::invalid_argument(
        "gauge_transform_mkdv: defined on the unit-length torus");
  Trajectory out = traj;
  const double sign = dir == GaugeDirection::kToGauged ? 1.0 : -1.0;
  double shift = 0.0;
  double prev_m = traj.snaps.empty()
                      ? 0.0
                      : square_integral(traj.snaps[0], traj.grid.length);
  for (std::size_t i = 0; i < traj.snaps.size(); ++i) {
    const double m = square_integral(traj.snaps[i], traj.grid.length);
    if (i > 0)
      shift += 0.5 * (prev_m + m) * (traj.times[i] - traj.times[i - 1]);
    prev_m = m;
    // Translate left by `shift` (to-gauged); the coefficient phase for
    // u(x + S) is exp(+i xi S).
    for (std::size_t j = 0; j < out.snaps[i].size(); ++j)
      out.snaps[i][j] *=
          std::exp(cplx(0.0, sign * traj.grid.xi(j) * shift));
  }
  return out;
}

}  // namespace displab
