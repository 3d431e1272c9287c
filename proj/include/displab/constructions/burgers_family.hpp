#pragma once
// Two-scale approximate solutions of the plain transport flow u_t + u u_x:
// a slow pedestal of height omega/lambda riding under a modulated wave packet
//
//   u_ap(t,x) = omega lambda^{-1} phitilde(x/lambda^delta)
//             + lambda^{-delta/2-s} phi(x/lambda^delta) cos(lambda x - omega t)
//
// The pedestal transports the packet so that the time derivative of the fast
// factor cancels against the transport term, leaving a residual that decays
// faster than lambda^{-s}.

#include "displab/constructions/residual_report.hpp"
#include "displab/spectral/bump.hpp"
#include "displab/spectral/grid.hpp"

namespace displab {

struct BurgersFamilyParams {
  double omega = 1.0;
  double lambda = 32.0;  // >= 8
  double delta = 1.2;    // in (1, 2)
  double s = 1.6;        // > 3/2
  BumpProfile phi = make_bump(BumpKind::kCompactPolynomial, 1.0, 2.0);
  BumpProfile phi_tilde = make_bump(BumpKind::kCompactPolynomial, 2.0, 4.0);
};

// Throws std::invalid_argument when the constraints above fail or when
// phi_tilde is not identically 1 on the support of phi.
void validate(const BurgersFamilyParams& p);

// Periodic box holding the envelope with margin, with the carrier frequency
// on-grid (integer number of wavelengths per box) and at least
// points_per_wavelength nodes per carrier wavelength (power-of-two count).
Grid1D burgers_grid(const BurgersFamilyParams& p,
                    double points_per_wavelength = 10.0);

// Exact sampling of the closed form, centered at the box midpoint.
Field1D burgers_approx(const BurgersFamilyParams& p, const Grid1D& g, double t);

// L2 audit of  dt u_ap + u_ap dx u_ap  with the time derivative taken
// analytically.  Terms: the transport pair dt u_h + u_l dx u_h (whose leading
// parts cancel), u_h dx u_l, u_h dx u_h, u_l dx u_l.
ResidualReport burgers_residual(const BurgersFamilyParams& p, const Grid1D& g,
                                double t);

}  // namespace displab
