#include "displab/evolve/conserved.hpp"

#include <cmath>
#include <limits>

#include "displab/spectral/fft.hpp"
#include "displab/spectral/ops.hpp"

namespace displab {
namespace {

// Spectral integral of |u_x|^2 (exact on the retained band).
double grad_sq(const Field1D& u) {
  std::vector<cplx> c = coefficients(u);
  double acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double xi = u.grid.xi(j);
    acc += xi * xi * std::norm(c[j]);
  }
  return u.grid.length * acc;
}

}  // namespace

double integral(const Field1D& u) {
  double acc = 0.0;
  for (const cplx& z : u.v) acc += z.real();
  return acc * u.grid.dx();
}

double l2_mass(const Field1D& u) {
  double acc = 0.0;
  for (const cplx& z : u.v) acc += std::norm(z);
  return acc * u.grid.dx();
}

double kdv_hamiltonian(const Field1D& u) {
  double cubic = 0.0;
  for (const cplx& z : u.v) {
    const double r = z.real();
    cubic += r * r * r;
  }
  cubic *= u.grid.dx();
  return 0.5 * grad_sq(u) - cubic / 6.0;
}

double nls_hamiltonian(const Field1D& u, int focusing) {
  double quartic = 0.0;
  for (const cplx& z : u.v) {
    const double a2 = std::norm(z);
    quartic += a2 * a2;
  }
  quartic *= u.grid.dx();
  return grad_sq(u) - 0.5 * static_cast<double>(focusing) * quartic;
}

ConservedRecord conserved_quantities(const EquationSpec& eq, const Field1D& u) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ConservedRecord rec{l2_mass(u), nan, nan};
  if (real_valued(eq.kind)) {
    double acc = 0.0;
    for (const cplx& z : u.v) acc += z.real() * z.real();
    rec.momentum = 0.5 * acc * u.grid.dx();
  }
  switch (eq.kind) {
    case EquationKind::kKdv:
      rec.hamiltonian = kdv_hamiltonian(u);
      break;
    case EquationKind::kNlsTorus:
    case EquationKind::kOdeModel:
      rec.hamiltonian = nls_hamiltonian(
          u, eq.kind == EquationKind::kOdeModel ? +1 : eq.focusing);
      break;
    default:
      break;
  }
  return rec;
}

double l2_mass2(const Field2D& u) {
  double acc = 0.0;
  for (const cplx& z : u.v) acc += std::norm(z);
  return acc * u.grid.dx() * u.grid.dx();
}

double nls_hamiltonian2(const Field2D& u, int focusing) {
  double quartic = 0.0;
  for (const cplx& z : u.v) {
    const double a2 = std::norm(z);
    quartic += a2 * a2;
  }
  quartic *= u.grid.dx() * u.grid.dx();
  return grad_sq_integral2(u) - 0.5 * static_cast<double>(focusing) * quartic;
}

}  // namespace displab
