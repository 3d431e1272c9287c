#include "displab/constructions/nls_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "displab/evolve/equation.hpp"
#include "displab/evolve/stepper.hpp"
#include "displab/spectral/ops.hpp"

namespace displab {
namespace {

double log_n(const NLSConcentrationParams& p) { return std::log(p.n); }

void check_common(const NLSConcentrationParams& p) {
  if (p.d != 1 && p.d != 2)
    throw std::invalid_argument("nls family: d must be 1 or 2");
  if (!(p.n >= 8.0))
    throw std::invalid_argument("nls family: n must be >= 8");
  if (!(p.delta1 > 0.0))
    throw std::invalid_argument("nls family: delta1 must be positive");
  if (p.focusing != 1.0 && p.focusing != -1.0)
    throw std::invalid_argument("nls family: focusing must be +1 or -1");
}

std::size_t snap_index(const std::vector<double>& times, double t) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < times.size(); ++i)
    if (std::abs(times[i] - t) < std::abs(times[best] - t)) best = i;
  return best;
}

}  // namespace

void validate(const NLSConcentrationParams& p) {
  check_common(p);
  if (!(p.s < 0.5 * p.d))
    throw std::invalid_argument("nls family: s must be below d/2");
  if (2 * p.l <= p.d)
    throw std::invalid_argument("nls family: l must exceed d/2");
  if (!(p.delta2 > 0.0 && p.delta2 < 1.0 / (p.l + 1)))
    throw std::invalid_argument(
        "nls family: delta2 must lie in (0, 1/(l+1))");
  double cap = 0.5 * p.delta2;
  if (p.s > 0.0)
    cap = std::min(cap, p.s * p.delta2 / (1.0 + 2.0 * p.s));
  if (!(p.delta1 < cap))
    throw std::invalid_argument(
        "nls family: delta1 too large for the chosen s and delta2");
}

double kappa_n(const NLSConcentrationParams& p) {
  check_common(p);
  return std::pow(log_n(p), -p.delta1);
}

double concentration_time(const NLSConcentrationParams& p) {
  validate(p);
  return std::pow(log_n(p), p.delta2) *
         std::pow(p.n, -2.0 * (0.5 * p.d - p.s));
}

double data_amplitude(const NLSConcentrationParams& p) {
  return kappa_n(p) * std::pow(p.n, 0.5 * p.d - p.s);
}

Grid1D nls_grid1(const NLSConcentrationParams& p, std::size_t nodes) {
  check_common(p);
  if (nodes < 128)
    throw std::invalid_argument(
        "nls family: grid too coarse for the data bandwidth");
  return make_grid(nodes, 32.0 / p.n);
}

Grid2D nls_grid2(const NLSConcentrationParams& p, std::size_t nodes) {
  check_common(p);
  if (nodes < 128)
    throw std::invalid_argument(
        "nls family: grid too coarse for the data bandwidth");
  return make_grid2(nodes, 32.0 / p.n);
}

Field1D nls_scaled_data1(const NLSConcentrationParams& p, const Grid1D& g,
                         double amplitude_factor) {
  check_common(p);
  const double amp = amplitude_factor * std::pow(p.n, 0.5 * p.d - p.s);
  const double mid = 0.5 * g.length;
  return sample(g, [&](double x) {
    return amp * p.phi.value(p.n * (x - mid));
  });
}

Field2D nls_scaled_data2(const NLSConcentrationParams& p, const Grid2D& g,
                         double amplitude_factor) {
  check_common(p);
  const double amp = amplitude_factor * std::pow(p.n, 0.5 * p.d - p.s);
  const double mid = 0.5 * g.length;
  return sample2(g, [&](double x0, double x1) {
    return amp * p.phi.value(p.n * std::hypot(x0 - mid, x1 - mid));
  });
}

Field1D nls_concentrating_data1(const NLSConcentrationParams& p,
                                const Grid1D& g) {
  return nls_scaled_data1(p, g, kappa_n(p));
}

Field2D nls_concentrating_data2(const NLSConcentrationParams& p,
                                const Grid2D& g) {
  return nls_scaled_data2(p, g, kappa_n(p));
}

AnsatzErrorSeries nls_ansatz_error(const NLSConcentrationParams& p,
                                   const std::vector<double>& times,
                                   double dt) {
  validate(p);
  if (times.empty())
    throw std::invalid_argument("nls family: no sample times given");
  const double tn = concentration_time(p);
  double tmax = 0.0;
  for (double t : times) {
    if (t < 0.0 || t > tn * (1.0 + 1e-9))
      throw std::invalid_argument(
          "nls family: sample times must lie in [0, t_n]");
    tmax = std::max(tmax, t);
  }

  AnsatzErrorSeries out;
  out.hs_variant = p.s < 0.0;
  if (tmax == 0.0) {
    out.times.assign(times.size(), 0.0);
    out.error.assign(times.size(), 0.0);
    return out;
  }

  const double amp = data_amplitude(p);
  if (dt <= 0.0) dt = std::min(tmax / 16.0, 0.02 / (amp * amp));

  StepControl ctl;
  ctl.dt = dt;
  ctl.t_end = tmax;
  const std::size_t nsteps =
      static_cast<std::size_t>(std::max(1.0, std::round(tmax / dt)));
  ctl.snapshot_stride = nsteps <= 128 ? 1 : (nsteps + 127) / 128;
  ctl.diagnostic_stride = 0;
  const EquationSpec eq = nls_torus(p.focusing);

  if (p.d == 1) {
    const Grid1D g = nls_grid1(p);
    const Field1D a = nls_concentrating_data1(p, g);
    const Trajectory tr = evolve(eq, a, ctl);
    for (double t : times) {
      const std::size_t i = snap_index(tr.times, t);
      const double ti = tr.times[i];
      const Field1D diff =
          tr.state(i) - nls_ode_solution(a, p.focusing * ti);
      out.times.push_back(ti);
      out.error.push_back(out.hs_variant
                              ? sobolev_norm(diff, p.s)
                              : semiclassical_energy1(diff, p.n, p.s, p.l));
    }
  } else {
    const Grid2D g = nls_grid2(p);
    const Field2D a = nls_concentrating_data2(p, g);
    const Trajectory2 tr = evolve2(eq, a, ctl);
    for (double t : times) {
      const std::size_t i = snap_index(tr.times, t);
      const double ti = tr.times[i];
      Field2D diff = tr.state(i);
      const Field2D v = nls_ode_solution2(a, p.focusing * ti);
      for (std::size_t j = 0; j < diff.v.size(); ++j) diff.v[j] -= v.v[j];
      out.times.push_back(ti);
      out.error.push_back(out.hs_variant
                              ? sobolev_norm2(diff, p.s)
                              : semiclassical_energy2(diff, p.n, p.s, p.l));
    }
  }
  return out;
}

GrowthPrediction nls_growth_prediction(const NLSConcentrationParams& p,
                                       double t) {
  check_common(p);
  if (t < 0.0) throw std::invalid_argument("nls family: t must be >= 0");
  const double sr = std::round(p.s);
  if (!(p.s >= 1.0) || std::abs(p.s - sr) > 1e-12)
    throw std::invalid_argument(
        "nls family: growth prediction needs a positive integer s");

  const double amp = data_amplitude(p);
  GrowthPrediction g;
  g.phase = t * amp * amp;
  g.predicted = kappa_n(p) * std::pow(g.phase, p.s);
  if (p.d == 1) {
    const Grid1D gr = nls_grid1(p);
    const Field1D v =
        nls_ode_solution(nls_concentrating_data1(p, gr), p.focusing * t);
    g.measured = sobolev_norm(v, p.s);
  } else {
    const Grid2D gr = nls_grid2(p);
    const Field2D v =
        nls_ode_solution2(nls_concentrating_data2(p, gr), p.focusing * t);
    g.measured = sobolev_norm2(v, p.s);
  }
  return g;
}

}  // namespace displab
