#pragma once
// Periodic 1-d grid and field containers.
//
// Conventions used throughout:
//   nodes        x_j = j * length / n,                j = 0..n-1
//   wavenumbers  xi_k = 2*pi*k / length,              k = -n/2..n/2-1
//   coefficients c_k = (1/n) * sum_j u_j e^{-i xi_k x_j}
// so c_k approximates the Fourier transform of the periodization and
// Parseval reads  (length/n) * sum_j |u_j|^2 = length * sum_k |c_k|^2.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace displab {

using cplx = std::complex<double>;

struct Grid1D {
  std::size_t n = 0;     // number of nodes, even
  double length = 0.0;   // box length

  double dx() const { return length / static_cast<double>(n); }
  double x(std::size_t j) const { return static_cast<double>(j) * dx(); }

  // Signed integer mode index for FFT bin j (standard wrap-around layout;
  // bin n/2 is the Nyquist mode and gets the negative sign).
  long mode_index(std::size_t j) const {
    const long h = static_cast<long>(n) / 2;
    const long k = static_cast<long>(j);
    return k < h ? k : k - static_cast<long>(n);
  }

  double xi(std::size_t j) const {
    return 2.0 * 3.141592653589793238462643383279502884 *
           static_cast<double>(mode_index(j)) / length;
  }

  double xi_max() const {
    return 3.141592653589793238462643383279502884 *
           static_cast<double>(n) / length;
  }

  bool operator==(const Grid1D& o) const {
    return n == o.n && length == o.length;
  }
};

// make_grid validates and constructs; throws std::invalid_argument on a bad
// request (n odd or zero, non-positive length).
Grid1D make_grid(std::size_t n, double length);

struct Field1D {
  Grid1D grid;
  std::vector<cplx> v;  // nodal values

  Field1D() = default;
  explicit Field1D(const Grid1D& g) : grid(g), v(g.n, cplx(0.0, 0.0)) {}

  std::size_t size() const { return v.size(); }
  cplx& operator[](std::size_t j) { return v[j]; }
  const cplx& operator[](std::size_t j) const { return v[j]; }

  void check_compatible(const Field1D& o) const {
    if (!(grid == o.grid))
      throw std::invalid_argument("field grids do not match");
  }

  Field1D& operator+=(const Field1D& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += o.v[j];
    return *this;
  }
  Field1D& operator-=(const Field1D& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= o.v[j];
    return *this;
  }
  Field1D& operator*=(double a) {
    for (auto& z : v) z *= a;
    return *this;
  }
};

Field1D operator+(Field1D a, const Field1D& b);
Field1D operator-(Field1D a, const Field1D& b);
Field1D operator*(double a, Field1D f);

// Pointwise product (no dealiasing; callers that need the 2/3 rule apply it
// through the evolver pipeline).
Field1D pointwise_mul(const Field1D& a, const Field1D& b);

// Sample a scalar function of x onto a grid.
template <typename F>
Field1D sample(const Grid1D& g, F&& f) {
  Field1D out(g);
  for (std::size_t j = 0; j < g.n; ++j) out[j] = cplx(f(g.x(j)), 0.0);
  return out;
}

template <typename F>
Field1D sample_complex(const Grid1D& g, F&& f) {
  Field1D out(g);
  for (std::size_t j = 0; j < g.n; ++j) out[j] = f(g.x(j));
  return out;
}

}  // namespace displab
