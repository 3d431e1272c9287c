#include "displab/spectral/grid2.hpp"

#include <cmath>

#include "displab/spectral/fft.hpp"
#include "displab/spectral/ops.hpp"

namespace displab {

Grid2D make_grid2(std::size_t n, double length) {
  if (n == 0 || (n % 2) != 0)
    throw std::invalid_argument("grid size must be a positive even number");
  if (!(length > 0.0))
    throw std::invalid_argument("grid length must be positive");
  return Grid2D{n, length};
}

void fft2_forward(Field2D& u) { fft_forward_2d(u.v, u.grid.n, u.grid.n); }
void fft2_inverse(Field2D& u) { fft_inverse_2d(u.v, u.grid.n, u.grid.n); }

double sobolev_norm2(const Field2D& u, double s) {
  Field2D c = u;
  fft2_forward(c);
  double acc = 0.0;
  for (std::size_t j0 = 0; j0 < u.grid.n; ++j0) {
    const double a = u.grid.xi(j0);
    for (std::size_t j1 = 0; j1 < u.grid.n; ++j1) {
      const double b = u.grid.xi(j1);
      acc += std::pow(1.0 + a * a + b * b, s) * std::norm(c.at(j0, j1));
    }
  }
  return std::sqrt(u.grid.length * u.grid.length * acc);
}

double l2_norm2(const Field2D& u) {
  double acc = 0.0;
  for (const auto& z : u.v) acc += std::norm(z);
  const double w = u.grid.dx() * u.grid.dx();
  return std::sqrt(acc * w);
}

double lp_norm2(const Field2D& u, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : u.v) m = std::max(m, std::abs(z));
    return m;
  }
  if (p <= 0.0) throw std::invalid_argument("lp_norm2: p must be positive");
  double acc = 0.0;
  for (const auto& z : u.v) acc += std::pow(std::abs(z), p);
  return std::pow(acc * u.grid.dx() * u.grid.dx(), 1.0 / p);
}

double grad_sq_integral2(const Field2D& u) {
  Field2D c = u;
  fft2_forward(c);
  double acc = 0.0;
  for (std::size_t j0 = 0; j0 < u.grid.n; ++j0) {
    const double a = u.grid.xi(j0);
    for (std::size_t j1 = 0; j1 < u.grid.n; ++j1) {
      const double b = u.grid.xi(j1);
      acc += (a * a + b * b) * std::norm(c.at(j0, j1));
    }
  }
  return u.grid.length * u.grid.length * acc;
}

double semiclassical_energy2(const Field2D& u, double n, double s, int l) {
  if (n <= 0.0) throw std::invalid_argument("semiclassical energy: n > 0");
  const double lo = l2_norm2(u);
  const double hi = sobolev_norm2(u, static_cast<double>(l));
  return std::sqrt(std::pow(n, 2.0 * s) * lo * lo +
                   std::pow(n, -2.0 * (l - s)) * hi * hi);
}

double semiclassical_energy1(const Field1D& u, double n, double s, int l) {
  if (n <= 0.0) throw std::invalid_argument("semiclassical energy: n > 0");
  const double lo = l2_norm(u);
  const double hi = sobolev_norm(u, static_cast<double>(l));
  return std::sqrt(std::pow(n, 2.0 * s) * lo * lo +
                   std::pow(n, -2.0 * (l - s)) * hi * hi);
}

}  // namespace displab
