#pragma once
// Concentrating data for the cubic Schrodinger flow on a small torus:
//
//   u_n(0,x) = kappa_n n^{d/2-s} phi(n(x - centre)),
//   kappa_n = log^{-delta1} n,  t_n = log^{delta2} n * n^{-2(d/2-s)},
//
// on the box of side 32/n.  Up to time t_n the dispersion acts on scales the
// data barely touches, so the flow tracks the pointwise rotation
// a -> a exp(i t |a|^2) while the H^s norm moves like
// kappa_n (t [kappa_n n^{d/2-s}]^2)^s.  The exponent constraints below make
// the phase large while the data stay small.

#include <cstddef>
#include <vector>

#include "displab/spectral/bump.hpp"
#include "displab/spectral/grid.hpp"
#include "displab/spectral/grid2.hpp"

namespace displab {

struct NLSConcentrationParams {
  int d = 2;             // torus dimension, 1 or 2
  double s = 0.5;        // regularity, < d/2 (may be negative)
  double n = 16.0;       // concentration frequency, >= 8
  double delta1 = 0.1;   // kappa exponent, in (0, bound below)
  double delta2 = 0.25;  // time exponent, in (0, 1/(l+1))
  int l = 2;             // energy index, integer > d/2
  BumpProfile phi = make_bump(BumpKind::kCompactPolynomial, 1.0, 2.0);
  double focusing = 1.0;  // +1 focusing, -1 defocusing
};

// Throws std::invalid_argument unless d in {1,2}, n >= 8, s < d/2,
// l > d/2, 0 < delta2 < 1/(l+1), and 0 < delta1 < delta2/2 (further
// < s*delta2/(1+2s) when s > 0).
void validate(const NLSConcentrationParams& p);

double kappa_n(const NLSConcentrationParams& p);
double concentration_time(const NLSConcentrationParams& p);  // t_n

// kappa_n n^{d/2-s}, the sup of the data.
double data_amplitude(const NLSConcentrationParams& p);

// Boxes of side 32/n (eight times the data support).  Node counts default
// to 4096 (d=1) and 512 per axis (d=2); both leave the retained band far
// above the data bandwidth ~n.
Grid1D nls_grid1(const NLSConcentrationParams& p, std::size_t nodes = 4096);
Grid2D nls_grid2(const NLSConcentrationParams& p, std::size_t nodes = 512);

// Exact samplers, centred at the box midpoint (radial profile when d = 2).
// The scaled variants replace kappa_n by the given factor; the decoherence
// experiments drive pairs of amplitudes through the same profile.
Field1D nls_concentrating_data1(const NLSConcentrationParams& p,
                                const Grid1D& g);
Field2D nls_concentrating_data2(const NLSConcentrationParams& p,
                                const Grid2D& g);
Field1D nls_scaled_data1(const NLSConcentrationParams& p, const Grid1D& g,
                         double amplitude_factor);
Field2D nls_scaled_data2(const NLSConcentrationParams& p, const Grid2D& g,
                         double amplitude_factor);

// Distance between the evolved flow and the pointwise rotation at the
// requested times (snapped to integration steps; the snapped times are
// returned).  The distance is the semiclassical energy E_n of the
// difference, except for s < 0 where the H^s norm of the difference is the
// meaningful gauge.  Times beyond t_n are rejected.  dt = 0 picks a step
// small against the rotation rate.
struct AnsatzErrorSeries {
  std::vector<double> times;
  std::vector<double> error;
  bool hs_variant = false;  // true when s < 0
};
AnsatzErrorSeries nls_ansatz_error(const NLSConcentrationParams& p,
                                   const std::vector<double>& times,
                                   double dt = 0.0);

// H^s growth of the pointwise rotation: predicted kappa_n (t A^2)^s against
// the measured spectral norm of the closed form, where A = data_amplitude.
// The prediction is only meaningful once the phase t A^2 clears 10.
// Requires s to be a positive integer.
struct GrowthPrediction {
  double phase = 0.0;
  double predicted = 0.0;
  double measured = 0.0;
  bool active() const { return phase >= 10.0; }
};
GrowthPrediction nls_growth_prediction(const NLSConcentrationParams& p,
                                       double t);

}  // namespace displab
