#pragma once
// Periodic boxes for modulated wave packets.  The box is sized to the
// envelope with a margin, then rounded up to an integer number of carrier
// wavelengths so the fast oscillation cos(lambda x) sits exactly on the
// Fourier lattice and does not leak.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "displab/spectral/grid.hpp"

namespace displab {

inline Grid1D carrier_grid(double lambda, double envelope_halfwidth,
                           double margin, double points_per_wavelength) {
  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  const double target = 2.0 * margin * envelope_halfwidth;
  const double wavelengths = std::ceil(target * lambda / kTwoPi);
  const double length = kTwoPi * wavelengths / lambda;
  std::size_t n = 2;
  while (static_cast<double>(n) < points_per_wavelength * wavelengths) n *= 2;
  return make_grid(n, length);
}

inline void require_carrier_resolved(const Grid1D& g, double lambda,
                                     double envelope_halfwidth) {
  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  const double ppw = kTwoPi / (g.dx() * lambda);
  if (ppw < 8.0 - 1e-9)
    throw std::invalid_argument(
        "grid under-resolves the carrier (needs 8 points per wavelength)");
  if (g.length < 2.0 * envelope_halfwidth)
    throw std::invalid_argument("box does not contain the envelope support");
}

}  // namespace displab
