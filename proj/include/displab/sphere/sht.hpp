#pragma once
// Spherical-harmonic analysis and synthesis on a Gauss-Legendre latitude by
// equispaced longitude grid.
//
// Conventions, relied on by everything downstream:
//
//   grid      cos(theta_i) runs over the nlat-point Gauss-Legendre nodes,
//             phi_j = 2 pi j / nlon, with nlat = nlon = 2B + 2;
//   basis     Y_l^m = Pbar_l^m(cos theta) e^{i m phi}, normalized so that
//             integral_{S^2} |Y_l^m|^2 dS = 1, and with no (-1)^m factor,
//             so at m = l the basis function is a positive multiple of
//             sin^l(theta) e^{i l phi};
//   analysis  c_{l,m} = integral u conj(Y_l^m) dS by quadrature;
//   Parseval  sum |c_{l,m}|^2 = ||u||^2_{L^2} on bandwidth-B fields;
//   -Lap      diagonal, eigenvalue l(l+1) on degree l;
//   H^s       ||u||^2 = sum (1 + l(l+1))^s |c_{l,m}|^2.
//
// The latitude rule is exact through polynomial degree 2*nlat - 1 = 4B + 3,
// so analysing the pointwise cube of a bandwidth-B field against degree <= B
// harmonics commits no quadrature error; the cubic evolution leans on that
// instead of a dealiasing mask.

#include <complex>
#include <cstddef>
#include <vector>

#include "displab/spectral/grid.hpp"

namespace displab {

struct SphereGrid {
  std::size_t bandwidth = 0;  // retain degrees l <= bandwidth
  std::size_t nlat = 0;
  std::size_t nlon = 0;
  std::vector<double> ct;  // cos(theta_i), ascending (south pole first)
  std::vector<double> st;  // sin(theta_i) > 0
  std::vector<double> w;   // Gauss-Legendre weights in cos(theta)
};

SphereGrid make_sphere_grid(std::size_t bandwidth);

struct SphereField {
  SphereGrid grid;
  std::vector<cplx> v;  // row-major nlat x nlon

  SphereField() = default;
  explicit SphereField(const SphereGrid& g)
      : grid(g), v(g.nlat * g.nlon, cplx(0.0, 0.0)) {}

  cplx& at(std::size_t i, std::size_t j) { return v[i * grid.nlon + j]; }
  const cplx& at(std::size_t i, std::size_t j) const {
    return v[i * grid.nlon + j];
  }
};

// Fill a field from f(cos theta, sin theta, phi).
template <typename F>
SphereField sample_sphere(const SphereGrid& g, F&& f) {
  SphereField u(g);
  for (std::size_t i = 0; i < g.nlat; ++i)
    for (std::size_t j = 0; j < g.nlon; ++j) {
      const double phi = 2.0 * 3.141592653589793238462643383279502884 *
                         static_cast<double>(j) / static_cast<double>(g.nlon);
      u.at(i, j) = f(g.ct[i], g.st[i], phi);
    }
  return u;
}

struct HarmonicCoeffs {
  std::size_t bandwidth = 0;
  std::vector<cplx> c;  // packed at index l(l+1)+m, size (B+1)^2

  HarmonicCoeffs() = default;
  explicit HarmonicCoeffs(std::size_t b)
      : bandwidth(b), c((b + 1) * (b + 1), cplx(0.0, 0.0)) {}

  cplx& at(std::size_t l, long m) {
    return c[static_cast<std::size_t>(static_cast<long>(l * (l + 1)) + m)];
  }
  const cplx& at(std::size_t l, long m) const {
    return c[static_cast<std::size_t>(static_cast<long>(l * (l + 1)) + m)];
  }

  double l2_norm() const;
  double sobolev_norm(double s) const;
};

// Precomputes the associated Legendre tables for one grid and applies the
// transform pair.  Forward and inverse are mutual inverses on bandwidth-B
// fields up to rounding.
class SphereTransform {
 public:
  explicit SphereTransform(const SphereGrid& g);

  const SphereGrid& grid() const { return grid_; }
  HarmonicCoeffs forward(const SphereField& u) const;
  SphereField inverse(const HarmonicCoeffs& c) const;

 private:
  // Pbar_l^m(ct[i]) at table_[block_[m] + (l - m) * nlat + i], m = 0..B.
  SphereGrid grid_;
  std::vector<double> table_;
  std::vector<std::size_t> block_;
};

// Quadrature norms of gridded fields; p = infinity gives the max.
double sphere_l2_norm(const SphereField& u);
double sphere_lp_norm(const SphereField& u, double p);

// Coefficient view of -Lap u: scales degree l by l(l+1).
HarmonicCoeffs sphere_laplacian(const HarmonicCoeffs& c);

// Rotation about the polar axis by alpha: c_{l,m} -> e^{i m alpha} c_{l,m}.
HarmonicCoeffs rotate_about_pole(const HarmonicCoeffs& c, double alpha);

}  // namespace displab
