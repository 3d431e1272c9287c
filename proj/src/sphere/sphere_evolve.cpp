#include "displab/sphere/sphere_evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "displab/evolve/phi_functions.hpp"
#include "displab/util/io.hpp"

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct DegreeTables {
  // Exponential RK4 coefficients, one entry per degree l = 0..B.
  std::vector<cplx> e, e2, q, a, b, g;
};

DegreeTables make_degree_tables(std::size_t B, double h) {
  DegreeTables tb;
  tb.e.resize(B + 1);
  tb.e2.resize(B + 1);
  tb.q.resize(B + 1);
  tb.a.resize(B + 1);
  tb.b.resize(B + 1);
  tb.g.resize(B + 1);
  for (std::size_t l = 0; l <= B; ++l) {
    const double ld = static_cast<double>(l);
    const cplx z = h * cplx(0.0, -(ld * (ld + 1.0)));
    tb.e[l] = std::exp(z);
    tb.e2[l] = std::exp(0.5 * z);
    tb.q[l] = 0.5 * h * phi1(0.5 * z);
    const cplx p1 = phi1(z), p2 = phi2(z), p3 = phi3(z);
    tb.a[l] = h * (p1 - 3.0 * p2 + 4.0 * p3);
    tb.b[l] = h * (p2 - 2.0 * p3);
    tb.g[l] = h * (4.0 * p3 - p2);
  }
  return tb;
}

// degree of the slot holding packed index j: the integer sqrt of j.
std::vector<std::size_t> degree_of_slot(std::size_t B) {
  std::vector<std::size_t> deg((B + 1) * (B + 1));
  for (std::size_t l = 0; l <= B; ++l)
    for (std::size_t j = l * l; j < (l + 1) * (l + 1); ++j) deg[j] = l;
  return deg;
}

double coeff_tail_fraction(const std::vector<cplx>& c,
                           const std::vector<std::size_t>& deg,
                           std::size_t B) {
  double top = 0.0, all = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double a = std::abs(c[j]);
    all = std::max(all, a);
    if (4 * deg[j] > 3 * B) top = std::max(top, a);
  }
  return all > 0.0 ? top / all : 0.0;
}

double coeff_mass(const std::vector<cplx>& c) {
  double acc = 0.0;
  for (const cplx& z : c) acc += std::norm(z);
  return acc;
}

}  // namespace

SphereTrajectory evolve_sphere_nls(const SphereField& u0,
                                   const SphereStepControl& ctl) {
  if (ctl.dt <= 0.0)
    throw std::invalid_argument("sphere evolve: dt must be > 0");
  if (ctl.t_end < 0.0)
    throw std::invalid_argument("sphere evolve: t_end must be >= 0");

  const SphereGrid& g = u0.grid;
  const std::size_t B = g.bandwidth;
  const SphereTransform sht(g);

  HarmonicCoeffs state = sht.forward(u0);
  const std::size_t ncoef = state.c.size();
  const std::vector<std::size_t> deg = degree_of_slot(B);

  // Data must leave two thirds of the band free so the cubic cascade stays
  // inside the resolved range.
  {
    double lowmax = 0.0, highmax = 0.0;
    for (std::size_t j = 0; j < ncoef; ++j) {
      const double a = std::abs(state.c[j]);
      if (3 * deg[j] <= B)
        lowmax = std::max(lowmax, a);
      else
        highmax = std::max(highmax, a);
    }
    if (highmax > 1e-10 * std::max(lowmax, 1e-300))
      throw std::invalid_argument(
          "sphere evolve: data must be band-limited to a third of the grid "
          "bandwidth");
  }

  SphereTrajectory tr;
  tr.grid = g;

  const std::size_t nsteps =
      ctl.t_end == 0.0
          ? 0
          : static_cast<std::size_t>(
                std::max(1.0, std::round(ctl.t_end / ctl.dt)));
  const double h = nsteps == 0 ? 0.0 : ctl.t_end / static_cast<double>(nsteps);
  const std::size_t stride =
      ctl.snapshot_stride == 0 ? 1 : ctl.snapshot_stride;

  const DegreeTables tb = make_degree_tables(B, h);

  // N(u) = -i |u|^2 u, evaluated on the grid and analysed back.
  SphereField phys(g);
  auto nonlinear = [&](const HarmonicCoeffs& c, std::vector<cplx>& out) {
    if (ctl.linear_only) {
      out.assign(ncoef, cplx(0.0, 0.0));
      return;
    }
    phys = sht.inverse(c);
    for (cplx& z : phys.v) z = cplx(0.0, -1.0) * (std::norm(z) * z);
    out = sht.forward(phys).c;
  };

  auto grid_energy = [&](const HarmonicCoeffs& c) {
    phys = sht.inverse(c);
    double quart = 0.0;
    for (std::size_t i = 0; i < g.nlat; ++i) {
      double rowsum = 0.0;
      for (std::size_t j = 0; j < g.nlon; ++j) {
        const double a2 = std::norm(phys.v[i * g.nlon + j]);
        rowsum += a2 * a2;
      }
      quart += g.w[i] * rowsum;
    }
    quart *= 2.0 * kPi / static_cast<double>(g.nlon);
    double grad = 0.0;
    for (std::size_t j = 0; j < ncoef; ++j) {
      const double ld = static_cast<double>(deg[j]);
      grad += ld * (ld + 1.0) * std::norm(c.c[j]);
    }
    return grad + 0.5 * quart;
  };

  auto snapshot = [&](double t) {
    tr.times.push_back(t);
    tr.snaps.push_back(state);
    tr.mass.push_back(coeff_mass(state.c));
    tr.energy.push_back(grid_energy(state));
  };
  snapshot(0.0);

  double linf0 = 0.0;
  {
    phys = sht.inverse(state);
    for (const cplx& z : phys.v) linf0 = std::max(linf0, std::abs(z));
    linf0 = std::max(linf0, 1e-300);
  }

  std::vector<cplx> nu(ncoef), na(ncoef), nb(ncoef), nc(ncoef);
  HarmonicCoeffs sa(B), sb(B), sc(B);

  for (std::size_t step = 1; step <= nsteps; ++step) {
    nonlinear(state, nu);
    for (std::size_t j = 0; j < ncoef; ++j) {
      const std::size_t l = deg[j];
      sa.c[j] = tb.e2[l] * state.c[j] + tb.q[l] * nu[j];
    }
    nonlinear(sa, na);
    for (std::size_t j = 0; j < ncoef; ++j) {
      const std::size_t l = deg[j];
      sb.c[j] = tb.e2[l] * state.c[j] + tb.q[l] * na[j];
    }
    nonlinear(sb, nb);
    for (std::size_t j = 0; j < ncoef; ++j) {
      const std::size_t l = deg[j];
      sc.c[j] = tb.e2[l] * sa.c[j] + tb.q[l] * (2.0 * nb[j] - nu[j]);
    }
    nonlinear(sc, nc);
    for (std::size_t j = 0; j < ncoef; ++j) {
      const std::size_t l = deg[j];
      state.c[j] = tb.e[l] * state.c[j] + tb.a[l] * nu[j] +
                   2.0 * tb.b[l] * (na[j] + nb[j]) + tb.g[l] * nc[j];
    }
    const double t = static_cast<double>(step) * h;
    tr.steps = step;

    const bool last = step == nsteps;
    if (ctl.guard_stride > 0 && (step % ctl.guard_stride == 0 || last)) {
      phys = sht.inverse(state);
      double linf = 0.0;
      for (const cplx& z : phys.v) linf = std::max(linf, std::abs(z));
      if (!(linf < ctl.blowup_factor * linf0)) {
        tr.guard_tripped = true;
        tr.guard_reason = "amplitude blowup at t = " + format_g17(t);
      } else if (coeff_tail_fraction(state.c, deg, B) > ctl.tail_trip) {
        tr.guard_tripped = true;
        tr.guard_reason = "unresolved spectral tail at t = " + format_g17(t);
      }
    }

    if (step % stride == 0 || last || tr.guard_tripped) snapshot(t);
    if (tr.guard_tripped) break;
  }
  return tr;
}

SphereAnsatzSeries ansatz_extract(const SphereTrajectory& traj, int n,
                                  double s, double kappa) {
  if (n < 1)
    throw std::invalid_argument("ansatz extract: n must be a positive integer");
  if (!(kappa > 0.0))
    throw std::invalid_argument("ansatz extract: kappa must be positive");
  if (traj.snaps.empty())
    throw std::invalid_argument("ansatz extract: empty trajectory");

  const std::size_t B = traj.grid.bandwidth;
  const std::size_t ln = static_cast<std::size_t>(n);
  if (ln > B) throw std::invalid_argument("ansatz extract: n above bandwidth");

  const HarmonicCoeffs& first = traj.snaps.front();
  const cplx lead0 = first.at(ln, n);
  {
    double off = 0.0;
    const std::size_t slot = ln * (ln + 1) + ln;
    for (std::size_t j = 0; j < first.c.size(); ++j)
      if (j != slot) off = std::max(off, std::abs(first.c[j]));
    if (!(std::abs(lead0) > 0.0) || off > 1e-8 * std::abs(lead0))
      throw std::invalid_argument(
          "ansatz extract: data is not a pure degree-n, order-n harmonic");
  }

  const double omega = omega_n(n, s);
  const double theta =
      static_cast<double>(n) * (static_cast<double>(n) + 1.0) +
      kappa * kappa * omega;
  const double phi_sq = std::norm(lead0) / (kappa * kappa);

  SphereAnsatzSeries out;
  out.times = traj.times;
  out.z.reserve(traj.snaps.size());
  out.q_l2.reserve(traj.snaps.size());
  out.q_h_half.reserve(traj.snaps.size());

  const std::size_t slot = ln * (ln + 1) + ln;
  for (std::size_t k = 0; k < traj.snaps.size(); ++k) {
    const HarmonicCoeffs& c = traj.snaps[k];
    const double t = traj.times[k];
    const cplx ref = lead0 * std::exp(cplx(0.0, -theta * t));
    const cplx z = c.c[slot] / ref - 1.0;

    double q2 = 0.0, qh = 0.0;
    for (std::size_t l = 0; l <= B; ++l) {
      const double ld = static_cast<double>(l);
      const double wgt = std::sqrt(1.0 + ld * (ld + 1.0));
      for (std::size_t j = l * l; j < (l + 1) * (l + 1); ++j) {
        if (j == slot) continue;
        const double a2 = std::norm(c.c[j]);
        q2 += a2;
        qh += wgt * a2;
      }
    }
    q2 /= kappa * kappa;
    qh /= kappa * kappa;

    out.z.push_back(z);
    out.q_l2.push_back(std::sqrt(q2));
    out.q_h_half.push_back(std::sqrt(qh));
    const double defect =
        std::fabs(std::norm(1.0 + z) * phi_sq + q2 - phi_sq) / phi_sq;
    out.cons1_max_err = std::max(out.cons1_max_err, defect);
  }
  return out;
}

SphereDecoherenceSeries decoherence_pair(const HighestWeightParams& p,
                                         double t_end, double dt) {
  validate(p);
  const double omega = omega_n(p.n, p.s);
  const double gap = std::pow(static_cast<double>(p.n), p.beta);
  const double kn_sq = p.kappa * p.kappa - gap / omega;
  if (!(kn_sq > 0.0))
    throw std::invalid_argument(
        "decoherence pair: kappa^2 <= n^beta / omega_n, companion amplitude "
        "would not be real");
  const double kn = std::sqrt(kn_sq);

  const SphereGrid g = make_sphere_grid(3 * static_cast<std::size_t>(p.n) + 2);
  SphereStepControl ctl;
  ctl.dt = dt;
  ctl.t_end = t_end;

  const SphereTrajectory ta =
      evolve_sphere_nls(scaled_highest_weight(g, p.n, p.s, p.kappa), ctl);
  const SphereTrajectory tb =
      evolve_sphere_nls(scaled_highest_weight(g, p.n, p.s, kn), ctl);
  if (ta.guard_tripped || tb.guard_tripped)
    throw std::runtime_error("decoherence pair: evolution guard tripped (" +
                             (ta.guard_tripped ? ta.guard_reason
                                               : tb.guard_reason) +
                             ")");
  const std::size_t count = std::min(ta.snaps.size(), tb.snaps.size());

  const double nd = static_cast<double>(p.n);
  const double hs_phi = std::pow(nd, 0.25 - p.s) *
                        std::pow(1.0 + nd * (nd + 1.0), 0.5 * p.s) *
                        std::sqrt(psi_l2_sq(p.n));

  SphereDecoherenceSeries out;
  out.kappa_n = kn;
  out.phase_gap = gap;
  HarmonicCoeffs diff(g.bandwidth);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < diff.c.size(); ++j)
      diff.c[j] = ta.snaps[k].c[j] - tb.snaps[k].c[j];
    const double t = ta.times[k];
    out.times.push_back(t);
    out.measured.push_back(diff.sobolev_norm(p.s));
    out.predicted.push_back(p.kappa * hs_phi *
                            2.0 * std::fabs(std::sin(0.5 * gap * t)));
  }
  return out;
}

}  // namespace displab
