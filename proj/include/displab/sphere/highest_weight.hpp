#pragma once
// The equator-concentrating harmonic family on the sphere and the scalars
// attached to it.
//
// psi_n(theta, phi) = sin^n(theta) e^{i n phi} is the single spherical
// harmonic of degree n and order n (eigenvalue n(n+1) of -Lap), peaking on
// the equator in a band of width ~ n^{-1/2}.  phi_n = n^{1/4 - s} psi_n
// keeps the family's H^s size roughly constant in n.  The pointwise cube
// splits against the basis as
//
//     |phi_n|^2 phi_n = omega_n phi_n + r_n,
//
// where omega_n = ||phi_n||_{L^4}^4 / ||phi_n||_{L^2}^2 grows like
// n^{1/2 - 2s} and the remainder r_n lives on order n, degrees n+2, ..., 3n
// only.  omega_n is the nonlinear frequency shift that drives the phase
// decoherence runs.

#include <cstddef>

#include "displab/sphere/sht.hpp"

namespace displab {

struct HighestWeightParams {
  int n = 8;
  double s = 0.2;      // Sobolev index, in (1/8, 1/4)
  double kappa = 0.5;  // data amplitude, in (0, 1]
  double beta = 0.3;   // decoherence phase-gap exponent, in (0, 1)
};

void validate(const HighestWeightParams& p);

// psi_n sampled on the grid; needs 3n <= bandwidth so cubes stay resolved.
SphereField highest_weight(const SphereGrid& g, int n);

// amplitude * n^{1/4 - s} * psi_n.
SphereField scaled_highest_weight(const SphereGrid& g, int n, double s,
                                  double amplitude);

// ||psi_n||_{L^2}^2 = 2 pi 2^{2n+1} (n!)^2 / (2n+1)!  in closed form.
double psi_l2_sq(int n);

// ||phi_n||_{L^4}^4 / ||phi_n||_{L^2}^2 by an exact 2n+2 node quadrature.
double omega_n(int n, double s);

struct CubicDecomposition {
  double omega = 0.0;          // measured coefficient of phi_n in the cube
  HarmonicCoeffs remainder;    // the cube minus omega * phi_n
  double low_degree_residual;  // max |remainder| over degrees <= n, relative
};

CubicDecomposition cubic_decompose(const SphereGrid& g, int n, double s);

}  // namespace displab
