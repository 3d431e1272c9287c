#pragma once
// Whole-line H^s norms of modulated bumps by direct spectral quadrature.
//
// For g(x) = phi(x / Lam) * cos(lambda x + alpha) the transform is two
// shifted copies of phi-hat, so ||g||_{H^s} reduces to a 1-d integral over
// the bump spectrum.  This evaluates localized-wave-packet norms at carrier
// frequencies far beyond what a periodic grid can afford, and serves as the
// independent oracle against which the grid-based norms are tested.

#include <vector>

#include "displab/spectral/bump.hpp"
#include "displab/spectral/grid.hpp"

namespace displab {

struct LineSpectrum {
  double deta = 0.0;           // spacing of the eta samples
  std::vector<double> eta;     // symmetric sample points
  std::vector<double> phat;    // phi-hat(eta); real because phi is even
};

// Tabulate phi-hat by a fine FFT of the profile on its own scale.
LineSpectrum line_spectrum(const BumpProfile& phi);

// lambda^{-s} * ||phi(./Lam) cos(lambda . + alpha)||_{H^s} / Lam^{1/2},
// i.e. the prefactor matching an envelope amplitude Lam^{-1/2} lambda^{-s}.
// Equivalently: with Lam = lambda^{1+delta} this is the localization ratio
//   lambda^{-(1+delta)/2 - s} ||phi_lambda(x) cos(lambda x + alpha)||_{H^s}.
double modulated_bump_hs_ratio(const LineSpectrum& sp, double s, double Lam,
                               double lambda, double alpha);

// Plain line H^s norm of the dilate a * phi(./Lam) (single low bump).
double bump_hs_norm(const LineSpectrum& sp, double s, double Lam, double a);

}  // namespace displab
