#include "displab/evolve/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "displab/evolve/conserved.hpp"
#include "displab/evolve/phi_functions.hpp"
#include "displab/spectral/fft.hpp"
#include "displab/spectral/ops.hpp"
#include "displab/util/io.hpp"

namespace displab {
namespace {

struct Etdrk4Tables {
  std::vector<cplx> e, e2, q, a, b, g;
};

Etdrk4Tables make_etdrk4_tables(const std::vector<cplx>& sym, double h) {
  const std::size_t n = sym.size();
  Etdrk4Tables tb;
  tb.e.resize(n);
  tb.e2.resize(n);
  tb.q.resize(n);
  tb.a.resize(n);
  tb.b.resize(n);
  tb.g.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = h * sym[j];
    tb.e[j] = std::exp(z);
    tb.e2[j] = std::exp(0.5 * z);
    tb.q[j] = 0.5 * h * phi1(0.5 * z);
    const cplx p1 = phi1(z), p2 = phi2(z), p3 = phi3(z);
    tb.a[j] = h * (p1 - 3.0 * p2 + 4.0 * p3);
    tb.b[j] = h * (p2 - 2.0 * p3);
    tb.g[j] = h * (4.0 * p3 - p2);
  }
  return tb;
}

// Largest coefficient in the top quarter of the retained band against the
// overall peak.  When this climbs, the cascade has reached the band edge and
// the grid no longer resolves the flow.
double tail_fraction(const std::vector<cplx>& c, const Grid1D& g) {
  const long keep = static_cast<long>(g.n) / 3;
  double top = 0.0, all = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long k = std::labs(g.mode_index(j));
    const double a = std::abs(c[j]);
    all = std::max(all, a);
    if (4 * k > 3 * keep && k <= keep) top = std::max(top, a);
  }
  return all > 0.0 ? top / all : 0.0;
}

double tail_fraction2(const std::vector<cplx>& c, const Grid2D& g) {
  const long keep = static_cast<long>(g.n) / 3;
  double top = 0.0, all = 0.0;
  for (std::size_t j0 = 0; j0 < g.n; ++j0) {
    const long k0 = std::labs(g.mode_index(j0));
    for (std::size_t j1 = 0; j1 < g.n; ++j1) {
      const long k = std::max(k0, std::labs(g.mode_index(j1)));
      const double a = std::abs(c[j0 * g.n + j1]);
      all = std::max(all, a);
      if (4 * k > 3 * keep && k <= keep) top = std::max(top, a);
    }
  }
  return all > 0.0 ? top / all : 0.0;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

// ||u_x||_inf from coefficients (steepening guard for the plain Burgers runs).
double grad_linf(const std::vector<cplx>& c, const Grid1D& g,
                 std::vector<cplx>& scratch) {
  scratch.resize(c.size());
  const long nyq = -static_cast<long>(g.n) / 2;
  for (std::size_t j = 0; j < c.size(); ++j)
    scratch[j] = g.mode_index(j) == nyq ? cplx(0.0, 0.0)
                                        : cplx(0.0, g.xi(j)) * c[j];
  fft_inverse(scratch);
  return max_abs(scratch);
}

double l2_of_coeffs(const std::vector<cplx>& c, double length) {
  double acc = 0.0;
  for (const cplx& z : c) acc += std::norm(z);
  return std::sqrt(length * acc);
}

void write_rows(const std::string& path, const std::vector<DiagnosticRow>& d) {
  CsvWriter csv(path, {"t", "l2", "linf", "tail"});
  for (const DiagnosticRow& r : d) csv.row({r.t, r.l2, r.linf, r.tail});
}

}  // namespace

Field1D Trajectory::state(std::size_t i) const {
  return from_coefficients(grid, snaps.at(i));
}

Field1D Trajectory::final_state() const { return state(snaps.size() - 1); }

void Trajectory::write_diagnostics(const std::string& path) const {
  write_rows(path, diag);
}

Field2D Trajectory2::state(std::size_t i) const {
  Field2D f(grid);
  f.v = snaps.at(i);
  fft_inverse_2d(f.v, grid.n, grid.n);
  return f;
}

Field2D Trajectory2::final_state() const { return state(snaps.size() - 1); }

void Trajectory2::write_diagnostics(const std::string& path) const {
  write_rows(path, diag);
}

Trajectory evolve(const EquationSpec& eq, const Field1D& u0,
                  const StepControl& ctl, Scheme scheme) {
  if (ctl.dt <= 0.0) throw std::invalid_argument("evolve: dt must be > 0");
  if (ctl.t_end < 0.0) throw std::invalid_argument("evolve: t_end must be >= 0");
  if (scheme == Scheme::kSplitStep && !pointwise_phase_flow(eq.kind))
    throw std::invalid_argument(
        "evolve: split-step needs a pointwise nonlinear phase flow");

  const Grid1D g = u0.grid;
  const std::size_t n = g.n;
  Trajectory tr;
  tr.grid = g;

  std::vector<cplx> u = coefficients(u0);
  tr.times.push_back(0.0);
  tr.snaps.push_back(u);

  const std::size_t nsteps =
      ctl.t_end == 0.0
          ? 0
          : static_cast<std::size_t>(
                std::max(1.0, std::round(ctl.t_end / ctl.dt)));
  const double h = nsteps == 0 ? 0.0 : ctl.t_end / static_cast<double>(nsteps);

  const std::vector<cplx> sym = linear_symbol_table(eq, g);
  Etdrk4Tables tb;
  std::vector<cplx> e(n), e2(n);
  if (scheme == Scheme::kEtdrk4) {
    tb = make_etdrk4_tables(sym, h);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = std::exp(h * sym[j]);
      e2[j] = std::exp(0.5 * h * sym[j]);
    }
  }

  NonlinearWorkspace ws;
  std::vector<cplx> nu(n), na(n), nb(n), nc(n), sa(n), sb(n), sc(n);
  const double nlsign = static_cast<double>(
      eq.kind == EquationKind::kOdeModel ? 1 : eq.focusing);

  NonlinearWorkspace dws;
  auto diag_row = [&](double t) {
    DiagnosticRow r;
    r.t = t;
    r.l2 = l2_of_coeffs(u, g.length);
    dws.phys = u;
    fft_inverse(dws.phys);
    r.linf = max_abs(dws.phys);
    r.tail = tail_fraction(u, g);
    return r;
  };

  double linf0 = 0.0;
  {
    dws.phys = u;
    fft_inverse(dws.phys);
    linf0 = std::max(max_abs(dws.phys), 1e-300);
  }
  // Plain Burgers steepens toward gradient blow-up; stop well before it.
  const bool steepening_guard =
      eq.kind == EquationKind::kBurgers && !eq.linear_only;
  const double grad0 =
      steepening_guard ? std::max(grad_linf(u, g, dws.tmp), 1e-300) : 0.0;
  if (ctl.diagnostic_stride > 0) tr.diag.push_back(diag_row(0.0));

  double t = 0.0;
  for (std::size_t step = 1; step <= nsteps; ++step) {
    switch (scheme) {
      case Scheme::kEtdrk4: {
        nonlinear_rhs(eq, g, u, nu, ws);
        for (std::size_t j = 0; j < n; ++j)
          sa[j] = tb.e2[j] * u[j] + tb.q[j] * nu[j];
        nonlinear_rhs(eq, g, sa, na, ws);
        for (std::size_t j = 0; j < n; ++j)
          sb[j] = tb.e2[j] * u[j] + tb.q[j] * na[j];
        nonlinear_rhs(eq, g, sb, nb, ws);
        for (std::size_t j = 0; j < n; ++j)
          sc[j] = tb.e2[j] * sa[j] + tb.q[j] * (2.0 * nb[j] - nu[j]);
        nonlinear_rhs(eq, g, sc, nc, ws);
        for (std::size_t j = 0; j < n; ++j)
          u[j] = tb.e[j] * u[j] + tb.a[j] * nu[j] +
                 2.0 * tb.b[j] * (na[j] + nb[j]) + tb.g[j] * nc[j];
        break;
      }
      case Scheme::kIfRk4: {
        nonlinear_rhs(eq, g, u, nu, ws);
        for (std::size_t j = 0; j < n; ++j)
          sa[j] = e2[j] * (u[j] + 0.5 * h * nu[j]);
        nonlinear_rhs(eq, g, sa, na, ws);
        for (std::size_t j = 0; j < n; ++j)
          sb[j] = e2[j] * u[j] + 0.5 * h * na[j];
        nonlinear_rhs(eq, g, sb, nb, ws);
        for (std::size_t j = 0; j < n; ++j)
          sc[j] = e[j] * u[j] + h * e2[j] * nb[j];
        nonlinear_rhs(eq, g, sc, nc, ws);
        for (std::size_t j = 0; j < n; ++j)
          u[j] = e[j] * u[j] +
                 (h / 6.0) * (e[j] * nu[j] + 2.0 * e2[j] * (na[j] + nb[j]) +
                              nc[j]);
        break;
      }
      case Scheme::kSplitStep: {
        ws.phys = u;
        fft_inverse(ws.phys);
        for (std::size_t j = 0; j < n; ++j)
          ws.phys[j] *= std::exp(cplx(0.0, 0.5 * h * nlsign * std::norm(ws.phys[j])));
        fft_forward(ws.phys);
        for (std::size_t j = 0; j < n; ++j) ws.phys[j] *= e[j];
        if (eq.dealias && eq.kind == EquationKind::kNlsTorus)
          dealias_two_thirds(ws.phys);
        fft_inverse(ws.phys);
        for (std::size_t j = 0; j < n; ++j)
          ws.phys[j] *= std::exp(cplx(0.0, 0.5 * h * nlsign * std::norm(ws.phys[j])));
        fft_forward(ws.phys);
        u = ws.phys;
        break;
      }
    }
    t = static_cast<double>(step) * h;
    tr.steps = step;

    const bool last = step == nsteps;
    if (ctl.guard_stride > 0 && (step % ctl.guard_stride == 0 || last)) {
      dws.phys = u;
      fft_inverse(dws.phys);
      const double linf = max_abs(dws.phys);
      if (!(linf < ctl.blowup_factor * linf0)) {
        tr.guard_tripped = true;
        tr.guard_reason = "amplitude blowup at t = " + format_g17(t);
      } else if (tail_fraction(u, g) > ctl.tail_trip) {
        tr.guard_tripped = true;
        tr.guard_reason = "unresolved spectral tail at t = " + format_g17(t);
      } else if (steepening_guard && grad_linf(u, g, dws.tmp) > 4.0 * grad0) {
        tr.guard_tripped = true;
        tr.guard_reason = "gradient steepening at t = " + format_g17(t);
      }
    }

    if (ctl.diagnostic_stride > 0 &&
        (step % ctl.diagnostic_stride == 0 || last || tr.guard_tripped))
      tr.diag.push_back(diag_row(t));

    if (tr.guard_tripped || last) {
      tr.times.push_back(t);
      tr.snaps.push_back(u);
      break;
    }
    if (ctl.snapshot_stride > 0 && step % ctl.snapshot_stride == 0) {
      tr.times.push_back(t);
      tr.snaps.push_back(u);
    }
  }
  return tr;
}

Trajectory2 evolve2(const EquationSpec& eq, const Field2D& u0,
                    const StepControl& ctl) {
  if (eq.kind != EquationKind::kNlsTorus && eq.kind != EquationKind::kOdeModel)
    throw std::invalid_argument("evolve2: planar stepper handles the cubic "
                                "Schrodinger and ode-model kinds only");
  if (ctl.dt <= 0.0) throw std::invalid_argument("evolve2: dt must be > 0");

  const Grid2D g = u0.grid;
  const std::size_t n = g.n, nn = n * n;
  const double nlsign = static_cast<double>(
      eq.kind == EquationKind::kOdeModel ? 1 : eq.focusing);
  const long keep = static_cast<long>(n) / 3;

  Trajectory2 tr;
  tr.grid = g;

  std::vector<cplx> u = u0.v;
  fft_forward_2d(u, n, n);
  tr.times.push_back(0.0);
  tr.snaps.push_back(u);

  const std::size_t nsteps =
      ctl.t_end == 0.0
          ? 0
          : static_cast<std::size_t>(
                std::max(1.0, std::round(ctl.t_end / ctl.dt)));
  const double h = nsteps == 0 ? 0.0 : ctl.t_end / static_cast<double>(nsteps);

  // Per-mode tables over the flattened (j0, j1) index.
  std::vector<cplx> sym(nn);
  for (std::size_t j0 = 0; j0 < n; ++j0) {
    const double xi0 = g.xi(j0);
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const double xi1 = g.xi(j1);
      sym[j0 * n + j1] =
          eq.kind == EquationKind::kOdeModel
              ? cplx(0.0, 0.0)
              : cplx(0.0, -(xi0 * xi0 + xi1 * xi1));
    }
  }
  Etdrk4Tables tb = make_etdrk4_tables(sym, h);

  std::vector<bool> keep_mask(nn);
  for (std::size_t j0 = 0; j0 < n; ++j0)
    for (std::size_t j1 = 0; j1 < n; ++j1)
      keep_mask[j0 * n + j1] = std::labs(g.mode_index(j0)) <= keep &&
                               std::labs(g.mode_index(j1)) <= keep;

  std::vector<cplx> phys(nn), nu(nn), na(nn), nb(nn), nc(nn), sa(nn), sb(nn),
      sc(nn);
  auto rhs = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
    phys = in;
    fft_inverse_2d(phys, n, n);
    for (std::size_t j = 0; j < nn; ++j)
      out[j] = cplx(0.0, nlsign) * (std::norm(phys[j]) * phys[j]);
    fft_forward_2d(out, n, n);
    if (eq.dealias && eq.kind == EquationKind::kNlsTorus)
      for (std::size_t j = 0; j < nn; ++j)
        if (!keep_mask[j]) out[j] = cplx(0.0, 0.0);
  };

  auto diag_row = [&](double t) {
    DiagnosticRow r;
    r.t = t;
    r.l2 = l2_of_coeffs(u, g.length * g.length);
    phys = u;
    fft_inverse_2d(phys, n, n);
    r.linf = max_abs(phys);
    r.tail = tail_fraction2(u, g);
    return r;
  };

  phys = u;
  fft_inverse_2d(phys, n, n);
  const double linf0 = std::max(max_abs(phys), 1e-300);
  if (ctl.diagnostic_stride > 0) tr.diag.push_back(diag_row(0.0));

  for (std::size_t step = 1; step <= nsteps; ++step) {
    rhs(u, nu);
    for (std::size_t j = 0; j < nn; ++j) sa[j] = tb.e2[j] * u[j] + tb.q[j] * nu[j];
    rhs(sa, na);
    for (std::size_t j = 0; j < nn; ++j) sb[j] = tb.e2[j] * u[j] + tb.q[j] * na[j];
    rhs(sb, nb);
    for (std::size_t j = 0; j < nn; ++j)
      sc[j] = tb.e2[j] * sa[j] + tb.q[j] * (2.0 * nb[j] - nu[j]);
    rhs(sc, nc);
    for (std::size_t j = 0; j < nn; ++j)
      u[j] = tb.e[j] * u[j] + tb.a[j] * nu[j] +
             2.0 * tb.b[j] * (na[j] + nb[j]) + tb.g[j] * nc[j];

    const double t = static_cast<double>(step) * h;
    tr.steps = step;
    const bool last = step == nsteps;

    if (ctl.guard_stride > 0 && (step % ctl.guard_stride == 0 || last)) {
      phys = u;
      fft_inverse_2d(phys, n, n);
      const double linf = max_abs(phys);
      if (!(linf < ctl.blowup_factor * linf0)) {
        tr.guard_tripped = true;
        tr.guard_reason = "amplitude blowup at t = " + format_g17(t);
      } else if (tail_fraction2(u, g) > ctl.tail_trip) {
        tr.guard_tripped = true;
        tr.guard_reason = "unresolved spectral tail at t = " + format_g17(t);
      }
    }

    if (ctl.diagnostic_stride > 0 &&
        (step % ctl.diagnostic_stride == 0 || last || tr.guard_tripped))
      tr.diag.push_back(diag_row(t));

    if (tr.guard_tripped || last) {
      tr.times.push_back(t);
      tr.snaps.push_back(u);
      break;
    }
    if (ctl.snapshot_stride > 0 && step % ctl.snapshot_stride == 0) {
      tr.times.push_back(t);
      tr.snaps.push_back(u);
    }
  }
  return tr;
}

Field1D nls_ode_solution(const Field1D& a, double t) {
  Field1D out = a;
  for (cplx& z : out.v) z *= std::exp(cplx(0.0, t * std::norm(z)));
  return out;
}

Field2D nls_ode_solution2(const Field2D& a, double t) {
  Field2D out = a;
  for (cplx& z : out.v) z *= std::exp(cplx(0.0, t * std::norm(z)));
  return out;
}

void write_series(const Trajectory& tr, const EquationSpec& eq, double s,
                  const std::string& path) {
  CsvWriter csv(path, {"t", "mass", "momentum", "hamiltonian", "hs_norm"});
  for (std::size_t i = 0; i < tr.snaps.size(); ++i) {
    const Field1D u = tr.state(i);
    const ConservedRecord rec = conserved_quantities(eq, u);
    csv.row({tr.times[i], rec.mass, rec.momentum, rec.hamiltonian,
             sobolev_norm(u, s)});
  }
}

void write_snapshot(const std::string& path, const Field1D& u, double t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  const std::uint64_t n = u.grid.n;
  const double length = u.grid.length;
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&length), sizeof length);
  out.write(reinterpret_cast<const char*>(&t), sizeof t);
  out.write(reinterpret_cast<const char*>(u.v.data()),
            static_cast<std::streamsize>(u.v.size() * sizeof(cplx)));
  if (!out) throw std::runtime_error("short write to " + path);
}

Field1D read_snapshot(const std::string& path, double* t_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t n = 0;
  double length = 0.0, t = 0.0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&length), sizeof length);
  in.read(reinterpret_cast<char*>(&t), sizeof t);
  Field1D u(make_grid(n, length));
  in.read(reinterpret_cast<char*>(u.v.data()),
          static_cast<std::streamsize>(u.v.size() * sizeof(cplx)));
  if (!in) throw std::runtime_error("truncated snapshot " + path);
  if (t_out) *t_out = t;
  return u;
}

}  // namespace displab
