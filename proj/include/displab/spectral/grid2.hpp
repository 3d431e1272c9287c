#pragma once
// Square periodic 2-d grid for the plane-torus cubic Schrodinger runs.
// Same coefficient conventions as the 1-d grid, applied per axis.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "displab/spectral/grid.hpp"

namespace displab {

struct Grid2D {
  std::size_t n = 0;    // nodes per axis, even
  double length = 0.0;  // box side

  double dx() const { return length / static_cast<double>(n); }
  double x(std::size_t j) const { return static_cast<double>(j) * dx(); }
  long mode_index(std::size_t j) const {
    const long h = static_cast<long>(n) / 2;
    const long k = static_cast<long>(j);
    return k < h ? k : k - static_cast<long>(n);
  }
  double xi(std::size_t j) const {
    return 2.0 * 3.141592653589793238462643383279502884 *
           static_cast<double>(mode_index(j)) / length;
  }
  bool operator==(const Grid2D& o) const {
    return n == o.n && length == o.length;
  }
};

Grid2D make_grid2(std::size_t n, double length);

struct Field2D {
  Grid2D grid;
  std::vector<cplx> v;  // row-major: v[j0 * n + j1]

  Field2D() = default;
  explicit Field2D(const Grid2D& g) : grid(g), v(g.n * g.n, cplx(0.0)) {}

  cplx& at(std::size_t j0, std::size_t j1) { return v[j0 * grid.n + j1]; }
  const cplx& at(std::size_t j0, std::size_t j1) const {
    return v[j0 * grid.n + j1];
  }
};

// Sample f(x0, x1).
template <typename F>
Field2D sample2(const Grid2D& g, F&& f) {
  Field2D out(g);
  for (std::size_t j0 = 0; j0 < g.n; ++j0)
    for (std::size_t j1 = 0; j1 < g.n; ++j1)
      out.at(j0, j1) = f(g.x(j0), g.x(j1));
  return out;
}

double sobolev_norm2(const Field2D& u, double s);
double l2_norm2(const Field2D& u);
double lp_norm2(const Field2D& u, double p);

// integral of |grad u|^2 (spectral).
double grad_sq_integral2(const Field2D& u);

// Semiclassical energy at scale n:
//   E_n(u) = ( n^{2s} ||u||_{L^2}^2 + n^{-2(l-s)} ||u||_{H^l}^2 )^{1/2}.
double semiclassical_energy2(const Field2D& u, double n, double s, int l);

// 1-d counterpart, same formula.
double semiclassical_energy1(const Field1D& u, double n, double s, int l);

void fft2_forward(Field2D& u);
void fft2_inverse(Field2D& u);

// Multiplier m(xi0, xi1) applied in coefficient space.
template <typename M>
Field2D apply_multiplier2(const Field2D& u, M&& m) {
  Field2D w = u;
  fft2_forward(w);
  for (std::size_t j0 = 0; j0 < w.grid.n; ++j0) {
    const double xi0 = w.grid.xi(j0);
    for (std::size_t j1 = 0; j1 < w.grid.n; ++j1) w.at(j0, j1) *= m(xi0, w.grid.xi(j1));
  }
  fft2_inverse(w);
  return w;
}

}  // namespace displab
