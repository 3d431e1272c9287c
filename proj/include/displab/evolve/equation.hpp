#pragma once
// Equation catalogue for the 1-d (and planar) flows, all in the common form
//   du/dt = L u + F(u)
// with L a Fourier multiplier and F evaluated pseudospectrally.

#include <string>
#include <vector>

#include "displab/spectral/grid.hpp"

namespace displab {

enum class EquationKind {
  kBurgers,           // F = -u u_x, L = 0
  kBurgersBbm,        // F = -(1 + eps xi^2)^{-1} [u u_x]^
  kBurgersParabolic,  // L = -eps xi^4 (fourth-order dissipation)
  kBenjaminOno,       // L = -i sgn(xi) xi^2
  kKdv,               // L = i xi^3
  kDispersiveGamma,   // L = i xi |xi|^gamma  (gamma = 2 recovers kKdv)
  kMkdv,              // L = i xi^3, F = -u^2 u_x
  kGaugedMkdv,        // F = -(u^2 - mean(u^2)) u_x
  kNlsTorus,          // L = -i |xi|^2, F = +-i |u|^2 u
  kOdeModel,          // L = 0, F = i |u|^2 u  (pointwise phase rotation)
};

struct EquationSpec {
  EquationKind kind = EquationKind::kBurgers;
  double epsilon = 0.0;  // regularization strength for the bbm/parabolic kinds
  double gamma = 2.0;    // dispersion exponent for kDispersiveGamma
  int focusing = +1;     // +1 focusing, -1 defocusing (kNlsTorus)
  bool dealias = true;   // 2/3-rule mask on pseudospectral products
  bool linear_only = false;  // drop F entirely (semigroup checks)
};

EquationSpec burgers();
EquationSpec burgers_bbm(double epsilon);
EquationSpec burgers_parabolic(double epsilon);
EquationSpec benjamin_ono();
EquationSpec kdv();
EquationSpec dispersive(double gamma);
EquationSpec mkdv();
EquationSpec gauged_mkdv();
EquationSpec nls_torus(int focusing);
EquationSpec ode_model();

std::string kind_name(EquationKind kind);
EquationKind kind_from_name(const std::string& name);  // throws on unknown

// True when the flow preserves real-valued data.
bool real_valued(EquationKind kind);

// True when the nonlinear flow alone is an exact pointwise phase rotation
// (|u| invariant), which the split-step scheme exploits.
bool pointwise_phase_flow(EquationKind kind);

cplx linear_symbol(const EquationSpec& eq, double xi);

// Per-mode symbol table; odd symbols get their Nyquist bin zeroed so the
// exponential keeps conjugate symmetry on real data.
std::vector<cplx> linear_symbol_table(const EquationSpec& eq, const Grid1D& g);

// Scratch buffers reused across stepper stages.
struct NonlinearWorkspace {
  std::vector<cplx> phys;
  std::vector<cplx> tmp;
};

// F(u) from coefficients to coefficients.
void nonlinear_rhs(const EquationSpec& eq, const Grid1D& g,
                   const std::vector<cplx>& coeffs, std::vector<cplx>& out,
                   NonlinearWorkspace& ws);

}  // namespace displab
