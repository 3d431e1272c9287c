#include "displab/spectral/grid.hpp"

namespace displab {

Grid1D make_grid(std::size_t n, double length) {
  if (n == 0 || (n % 2) != 0)
    throw std::invalid_argument("grid size must be a positive even number");
  if (!(length > 0.0))
    throw std::invalid_argument("grid length must be positive");
  return Grid1D{n, length};
}

Field1D operator+(Field1D a, const Field1D& b) { return a += b; }
Field1D operator-(Field1D a, const Field1D& b) { return a -= b; }
Field1D operator*(double a, Field1D f) { return f *= a; }

Field1D pointwise_mul(const Field1D& a, const Field1D& b) {
  a.check_compatible(b);
  Field1D out(a.grid);
  for (std::size_t j = 0; j < a.v.size(); ++j) out[j] = a.v[j] * b.v[j];
  return out;
}

}  // namespace displab
