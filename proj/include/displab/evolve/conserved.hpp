#pragma once
// Invariants used to audit the integrators.

#include "displab/evolve/equation.hpp"
#include "displab/spectral/grid.hpp"
#include "displab/spectral/grid2.hpp"

namespace displab {

// integral of u over the box (real part).
double integral(const Field1D& u);

// integral of |u|^2.
double l2_mass(const Field1D& u);

// For u_t + u_xxx + u u_x = 0:  integral of (u_x^2 / 2 - u^3 / 6).
double kdv_hamiltonian(const Field1D& u);

// For i u_t + u_xx + sign |u|^2 u = 0:
//   integral of |u_x|^2 - (sign / 2) |u|^4.
double nls_hamiltonian(const Field1D& u, int focusing);

// The invariants that apply to the given flow; entries that do not apply are
// NaN.  mass = integral of |u|^2, momentum = integral of u^2 / 2 (real
// kinds), hamiltonian for the KdV and Schrodinger kinds.
struct ConservedRecord {
  double mass;
  double momentum;
  double hamiltonian;
};

ConservedRecord conserved_quantities(const EquationSpec& eq, const Field1D& u);

// Planar counterparts for the cubic Schrodinger flow.
double l2_mass2(const Field2D& u);
double nls_hamiltonian2(const Field2D& u, int focusing);

}  // namespace displab
