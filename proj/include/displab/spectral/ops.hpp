#pragma once
// Fourier-multiplier operators and norms on periodic fields.

#include <functional>

#include "displab/spectral/grid.hpp"

namespace displab {

// A Fourier multiplier m(xi) plus the metadata needed to treat the Nyquist
// mode and realness correctly.  Odd symbols have no well-defined value on the
// unpaired Nyquist bin, so that bin is zeroed; even symbols act on it
// normally.
struct MultiplierSpec {
  enum class Parity { kEven, kOdd, kNone };

  std::function<cplx(double)> symbol;
  Parity parity = Parity::kNone;

  // True if m(-xi) == conj(m(xi)), i.e. the operator maps real fields to
  // real fields.  Informational; used by tests.
  bool hermitian = true;
};

Field1D apply_multiplier(const Field1D& u, const MultiplierSpec& spec);

// d^order/dx^order, symbol (i xi)^order.
Field1D derivative(const Field1D& u, int order = 1);

// Hilbert transform, symbol -i*sign(xi) with sign(0) = 0.
Field1D hilbert_transform(const Field1D& u);

// Bracket operator with symbol (1 + xi^2)^(s/2).
Field1D bracket_power(const Field1D& u, double s);

// Discrete Sobolev norm:  ||u||_{H^s}^2 = L * sum_k (1+xi_k^2)^s |c_k|^2.
double sobolev_norm(const Field1D& u, double s);

// Trapezoid L^p norm (all nodes carry weight dx); p = infinity -> max |u|.
double lp_norm(const Field1D& u, double p);

// L^2 norm, the p = 2 special case, computed in physical space.
double l2_norm(const Field1D& u);

// Dyadic block weight: band = 1 keeps |xi| <= 2 (the ball), band = 2^j keeps
// the annulus band/2 < |xi| < 2*band.  The weights over band = 1,2,4,...
// sum to 1 at every xi, which makes the blocks a partition of the identity.
double littlewood_paley_weight(double band, double xi);
Field1D littlewood_paley_project(const Field1D& u, double band);

// Spectral mollifier: multiply coefficients by cutoff(eps * xi); the cutoff
// equals 1 for |eps*xi| <= 1, so modes below 1/eps pass through exactly.
Field1D mollify(const Field1D& u, double eps);

// Sharp band restriction |xi| in [xi_lo, xi_hi] (measurement tool).
Field1D band_project(const Field1D& u, double xi_lo, double xi_hi);

// Translation u(x) -> u(x - shift) by phase multiplication, exact for
// band-limited fields.
Field1D spectral_shift(const Field1D& u, double shift);

// Zero all modes with |k| > n/3 (2/3-rule dealiasing), in place.
void dealias_two_thirds(std::vector<cplx>& coeffs);
Field1D dealias_two_thirds(const Field1D& u);

// Zero-pad the spectrum onto a finer grid over the same box (exact for
// band-limited fields).  Requires equal lengths and fine.n >= u.grid.n.
Field1D spectral_upsample(const Field1D& u, const Grid1D& fine);

// Largest coefficient magnitude in the top quarter of the retained band
// divided by the overall largest magnitude; the resolution guard in the
// evolvers trips when this exceeds its threshold.
double spectral_tail_fraction(const Field1D& u);

// Commutator ratio  ||[D^s, f] g||_{L^2} / (||f_x||_inf ||D^{s-1} g||_{L^2}
//                                        + ||D^s f||_{L^2} ||g||_inf).
// Requires s >= 1 and real f.
double kato_ponce_ratio(const Field1D& f, const Field1D& g, double s);

// Amplitude/space scaling u(x) = lambda^{-1} v(lambda^{-1} x): `spread`
// takes v on (n, L) to u on (n, lambda * L); `focus` is the exact inverse.
enum class ScalingDir { kSpread, kFocus };
Field1D scaling_transform(const Field1D& u, double lambda, ScalingDir dir);

// Drop imaginary parts (used by real-coefficient evolutions where roundoff
// may leave ~1e-16 imaginary residue).
void project_real(Field1D& u);

double max_imag(const Field1D& u);

}  // namespace displab
