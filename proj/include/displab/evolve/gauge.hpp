#pragma once
// Change of frame between the plain and gauged modified KdV flows on the
// unit-length torus.
//
// If v solves v_t + v_xxx + v^2 v_x = 0 then u(t, x) = v(t, x + S(t)) with
// S(t) = integral_0^t integral v^2 dx dtau solves
// u_t + u_xxx + (u^2 - integral u^2) u_x = 0.  The inner integral is an
// invariant of both flows, so S is linear in t up to integrator drift; the
// trajectory transform integrates it by trapezoid over the stored snapshots
// anyway, and the translation itself is applied spectrally (exact for
// band-limited states).

#include "displab/evolve/stepper.hpp"
#include "displab/spectral/grid.hpp"

namespace displab {

// mean(u^2) over the box; equals the drift speed on the unit torus.
double gauge_speed(const Field1D& u);

// Single-state shortcuts that use the instantaneous integral of u^2.
Field1D mkdv_to_gauged(const Field1D& v, double t);
Field1D gauged_to_mkdv(const Field1D& u, double t);

enum class GaugeDirection { kToGauged, kFromGauged };

// Whole-trajectory transform with the shift accumulated by trapezoid.
// Rejects grids whose box length is not 1.
Trajectory gauge_transform_mkdv(const Trajectory& traj, GaugeDirection dir);

}  // namespace displab
