#pragma once
// Fixed-step time integration for du/dt = L u + F(u) with diagonal L.
//
// Default scheme is the fourth-order exponential integrator (the linear part
// is advanced exactly, so stiff dispersive symbols impose no step
// restriction).  An integrating-factor RK4 is kept for cross-checks, and a
// Strang splitting is available for the flows whose nonlinear part is an
// exact pointwise phase rotation.

#include <string>
#include <vector>

#include "displab/evolve/equation.hpp"
#include "displab/spectral/grid.hpp"
#include "displab/spectral/grid2.hpp"

namespace displab {

enum class Scheme { kEtdrk4, kIfRk4, kSplitStep };

struct StepControl {
  double dt = 1e-3;                   // requested step (rounded to hit t_end)
  double t_end = 1.0;
  std::size_t snapshot_stride = 0;    // 0 keeps only initial and final states
  std::size_t diagnostic_stride = 8;  // steps between diagnostic rows, 0 = off
  double blowup_factor = 1e6;         // trip when Linf exceeds this x initial
  double tail_trip = 1e-6;            // trip on band-edge coefficient mass
  std::size_t guard_stride = 16;      // steps between guard checks, 0 = off
};

struct DiagnosticRow {
  double t = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double tail = 0.0;
};

struct Trajectory {
  Grid1D grid;
  std::vector<double> times;             // one entry per snapshot
  std::vector<std::vector<cplx>> snaps;  // coefficient snapshots
  std::vector<DiagnosticRow> diag;
  std::size_t steps = 0;
  bool guard_tripped = false;
  std::string guard_reason;

  Field1D state(std::size_t i) const;
  Field1D final_state() const;
  void write_diagnostics(const std::string& path) const;
};

Trajectory evolve(const EquationSpec& eq, const Field1D& u0,
                  const StepControl& ctl, Scheme scheme = Scheme::kEtdrk4);

// Planar counterpart; accepts the cubic Schrodinger and ode-model kinds.
struct Trajectory2 {
  Grid2D grid;
  std::vector<double> times;
  std::vector<std::vector<cplx>> snaps;
  std::vector<DiagnosticRow> diag;
  std::size_t steps = 0;
  bool guard_tripped = false;
  std::string guard_reason;

  Field2D state(std::size_t i) const;
  Field2D final_state() const;
  void write_diagnostics(const std::string& path) const;
};

Trajectory2 evolve2(const EquationSpec& eq, const Field2D& u0,
                    const StepControl& ctl);

// Closed-form flow of du/dt = i |u|^2 u:  a(x) -> a(x) exp(i t |a(x)|^2).
Field1D nls_ode_solution(const Field1D& a, double t);
Field2D nls_ode_solution2(const Field2D& a, double t);

// Per-snapshot series: columns t, mass, momentum, hamiltonian, hs_norm.
void write_series(const Trajectory& tr, const EquationSpec& eq, double s,
                  const std::string& path);

// Raw state dump, little-endian: u64 node count, f64 box length, f64 time,
// then n (re, im) doubles.
void write_snapshot(const std::string& path, const Field1D& u, double t);
Field1D read_snapshot(const std::string& path, double* t_out = nullptr);

}  // namespace displab
