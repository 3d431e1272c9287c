#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "displab/evolve/conserved.hpp"
#include "displab/evolve/equation.hpp"
#include "displab/evolve/gauge.hpp"
#include "displab/evolve/phi_functions.hpp"
#include "displab/evolve/stepper.hpp"
#include "displab/spectral/fft.hpp"
#include "displab/spectral/grid.hpp"
#include "displab/spectral/grid2.hpp"
#include "displab/spectral/ops.hpp"
#include "doctest.h"

using namespace displab;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double max_abs_diff(const Field1D& a, const Field1D& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

StepControl quiet(double dt, double t_end) {
  StepControl ctl;
  ctl.dt = dt;
  ctl.t_end = t_end;
  ctl.diagnostic_stride = 0;
  return ctl;
}

}  // namespace

TEST_CASE("equation catalogue validates and names its members") {
  CHECK_THROWS_AS(burgers_bbm(0.0), std::invalid_argument);
  CHECK_THROWS_AS(burgers_parabolic(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(dispersive(0.5), std::invalid_argument);
  CHECK_THROWS_AS(nls_torus(2), std::invalid_argument);
  CHECK_THROWS_AS(kind_from_name("no-such-flow"), std::invalid_argument);
  for (const EquationSpec& eq :
       {burgers(), benjamin_ono(), kdv(), mkdv(), gauged_mkdv(), nls_torus(1),
        ode_model()}) {
    CHECK(kind_from_name(kind_name(eq.kind)) == eq.kind);
  }
  CHECK(real_valued(EquationKind::kKdv));
  CHECK(!real_valued(EquationKind::kNlsTorus));
  CHECK(pointwise_phase_flow(EquationKind::kOdeModel));
  CHECK(!pointwise_phase_flow(EquationKind::kKdv));
}

TEST_CASE("linear semigroups reproduce the analytic phase evolution") {
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const double t = 0.7;
  const Field1D u0 = sample(g, [](double x) { return std::cos(3.0 * x); });
  const StepControl ctl = quiet(1e-3, t);

  auto run_linear = [&](EquationSpec eq) {
    eq.linear_only = true;
    return evolve(eq, u0, ctl).final_state();
  };

  // third-order dispersion: cos(kx) -> cos(kx + k^3 t)
  const Field1D want_kdv = sample(g, [&](double x) {
    return std::cos(3.0 * x + 27.0 * t);
  });
  CHECK(max_abs_diff(run_linear(kdv()), want_kdv) < 1e-10);

  // i xi |xi| symbol: cos(kx) -> cos(kx - k^2 t) for k > 0
  const Field1D want_bo = sample(g, [&](double x) {
    return std::cos(3.0 * x - 9.0 * t);
  });
  CHECK(max_abs_diff(run_linear(benjamin_ono()), want_bo) < 1e-10);

  // gamma = 1.5: cos(kx) -> cos(kx + k^{2.5} t)
  const Field1D want_gam = sample(g, [&](double x) {
    return std::cos(3.0 * x + std::pow(3.0, 2.5) * t);
  });
  CHECK(max_abs_diff(run_linear(dispersive(1.5)), want_gam) < 1e-10);

  // free Schrodinger flow: e^{ikx} -> e^{i(kx - k^2 t)}
  const Field1D c0 = sample_complex(g, [](double x) {
    return std::exp(cplx(0.0, 3.0 * x));
  });
  EquationSpec nl = nls_torus(1);
  nl.linear_only = true;
  const Field1D cf = evolve(nl, c0, ctl).final_state();
  const Field1D want_nls = sample_complex(g, [&](double x) {
    return std::exp(cplx(0.0, 3.0 * x - 9.0 * t));
  });
  CHECK(max_abs_diff(cf, want_nls) < 1e-10);

  // fourth-order dissipation: cos(kx) -> e^{-eps k^4 t} cos(kx)
  const Field1D want_par = sample(g, [&](double x) {
    return std::exp(-0.01 * 81.0 * t) * std::cos(3.0 * x);
  });
  CHECK(max_abs_diff(run_linear(burgers_parabolic(0.01)), want_par) < 1e-10);
}

TEST_CASE("ode model flow matches the pointwise rotation") {
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const Field1D a = sample_complex(g, [](double x) {
    return cplx(0.4 + 0.2 * std::cos(x), 0.1 * std::sin(2.0 * x));
  });
  const Trajectory tr = evolve(ode_model(), a, quiet(1e-3, 0.5));
  CHECK(max_abs_diff(tr.final_state(), nls_ode_solution(a, 0.5)) < 1e-8);
}

TEST_CASE("kdv soliton travels at its closed-form speed") {
  const double kap = 0.5, x0 = 10.0, L = 40.0;
  const Grid1D g = make_grid(512, L);
  // u = 12 kap^2 sech^2(kap (x - 4 kap^2 t - x0)) solves u_t + u_xxx + u u_x = 0
  auto sol = [&](double x, double t) {
    double y = x - 4.0 * kap * kap * t - x0;
    while (y > 0.5 * L) y -= L;
    while (y < -0.5 * L) y += L;
    const double c = std::cosh(kap * y);
    return 12.0 * kap * kap / (c * c);
  };
  const Field1D u0 = sample(g, [&](double x) { return sol(x, 0.0); });
  const Trajectory tr = evolve(kdv(), u0, quiet(2e-3, 1.0));
  REQUIRE(!tr.guard_tripped);
  const Field1D want = sample(g, [&](double x) { return sol(x, 1.0); });
  CHECK(max_abs_diff(tr.final_state(), want) < 1e-6);
}

TEST_CASE("dispersive flows conserve their invariants") {
  const Grid1D g = make_grid(512, 2.0 * kPi);
  const Field1D u0 = sample(g, [](double x) {
    return 0.5 * std::sin(x) + 0.2 * std::cos(2.0 * x);
  });
  const StepControl ctl = quiet(5e-4, 1.0);
  for (const EquationSpec& eq : {kdv(), benjamin_ono(), mkdv(), gauged_mkdv()}) {
    const Trajectory tr = evolve(eq, u0, ctl);
    REQUIRE(!tr.guard_tripped);
    const ConservedRecord a = conserved_quantities(eq, u0);
    const ConservedRecord b = conserved_quantities(eq, tr.final_state());
    CHECK(std::abs(b.mass - a.mass) / a.mass < 1e-11);
    CHECK(std::abs(b.momentum - a.momentum) / std::abs(a.momentum) < 1e-11);
    if (!std::isnan(a.hamiltonian))
      CHECK(std::abs(b.hamiltonian - a.hamiltonian) /
                std::abs(a.hamiltonian) <
            1e-11);
    // real flows stay real
    CHECK(max_imag(tr.final_state()) < 1e-14);
  }
  // the bbm-regularized kind conserves the integral, not the L2 mass
  const Trajectory tb = evolve(burgers_bbm(0.1), u0, ctl);
  CHECK(std::abs(integral(tb.final_state()) - integral(u0)) < 1e-12);
}

TEST_CASE("cubic torus flow conserves mass and energy") {
  const Grid1D g = make_grid(256, 2.0 * kPi);
  const Field1D u0 = sample_complex(g, [](double x) {
    return cplx(0.8, 0.0) / std::cosh(2.0 * (x - kPi)) *
           std::exp(cplx(0.0, std::sin(x)));
  });
  const Trajectory tr = evolve(nls_torus(+1), u0, quiet(1e-3, 0.5));
  REQUIRE(!tr.guard_tripped);
  const ConservedRecord a = conserved_quantities(nls_torus(+1), u0);
  const ConservedRecord b =
      conserved_quantities(nls_torus(+1), tr.final_state());
  CHECK(std::abs(b.mass - a.mass) / a.mass < 1e-12);
  CHECK(std::abs(b.hamiltonian - a.hamiltonian) / std::abs(a.hamiltonian) <
        1e-8);
}

TEST_CASE("the three schemes agree on the cubic torus flow") {
  const Grid1D g = make_grid(256, 2.0 * kPi);
  const Field1D u0 = sample_complex(g, [](double x) {
    return cplx(0.8, 0.0) / std::cosh(2.0 * (x - kPi)) *
           std::exp(cplx(0.0, std::sin(x)));
  });
  const StepControl ctl = quiet(1e-3, 0.5);
  const Field1D fe = evolve(nls_torus(+1), u0, ctl, Scheme::kEtdrk4).final_state();
  const Field1D fi = evolve(nls_torus(+1), u0, ctl, Scheme::kIfRk4).final_state();
  const Field1D fs = evolve(nls_torus(+1), u0, ctl, Scheme::kSplitStep).final_state();
  CHECK(l2_norm(fe - fi) < 1e-7);
  CHECK(l2_norm(fe - fs) < 1e-4);
  // split-step is only defined for pointwise nonlinear phase flows
  CHECK_THROWS_AS(evolve(burgers(), u0, ctl, Scheme::kSplitStep),
                  std::invalid_argument);
}

TEST_CASE("steepening guard stops the plain transport flow before the shock") {
  const Grid1D g = make_grid(256, 2.0 * kPi);
  const Field1D u0 = sample(g, [](double x) { return std::sin(x); });
  const Trajectory tr = evolve(burgers(), u0, quiet(1e-3, 2.0));
  CHECK(tr.guard_tripped);
  CHECK(tr.guard_reason.substr(0, 20) == "gradient steepening ");
  // sin data shocks at t = 1; the guard must fire before that
  CHECK(tr.times.back() < 1.0);
}

TEST_CASE("step control validation and snapshot bookkeeping") {
  const Grid1D g = make_grid(64, 2.0 * kPi);
  const Field1D u0 = sample(g, [](double x) { return 0.1 * std::sin(x); });
  StepControl bad = quiet(-1.0, 1.0);
  CHECK_THROWS_AS(evolve(kdv(), u0, bad), std::invalid_argument);
  bad = quiet(1e-2, -1.0);
  CHECK_THROWS_AS(evolve(kdv(), u0, bad), std::invalid_argument);

  StepControl ctl = quiet(1e-2, 1.0);
  ctl.snapshot_stride = 10;
  const Trajectory tr = evolve(kdv(), u0, ctl);
  // t = 0, then every 10th of 100 steps; the final step is already on stride
  REQUIRE(tr.times.size() == 11);
  CHECK(tr.times[0] == 0.0);
  CHECK(tr.times[1] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(tr.times.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tr.state(3).grid == g);

  ctl.snapshot_stride = 0;  // initial and final only
  const Trajectory tr2 = evolve(kdv(), u0, ctl);
  CHECK(tr2.times.size() == 2);

  ctl.diagnostic_stride = 25;
  const Trajectory tr3 = evolve(kdv(), u0, ctl);
  REQUIRE(!tr3.diag.empty());
  CHECK(tr3.diag.front().t == 0.0);
  CHECK(tr3.diag.back().t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tr3.diag.back().l2 == doctest::Approx(l2_norm(u0)).epsilon(1e-9));
}

TEST_CASE("snapshot files round trip bit for bit") {
  const Grid1D g = make_grid(64, 3.0);
  const Field1D u = sample_complex(g, [](double x) {
    return cplx(std::sin(5.0 * x), std::cos(2.0 * x));
  });
  const std::string path = (std::filesystem::temp_directory_path() /
                            "displab_snapshot_roundtrip.bin").string();
  write_snapshot(path, u, 0.625);
  double t = 0.0;
  const Field1D back = read_snapshot(path, &t);
  CHECK(t == 0.625);
  REQUIRE(back.grid == g);
  for (std::size_t j = 0; j < g.n; ++j) CHECK(back[j] == u[j]);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_snapshot("/nonexistent/snapshot.bin"),
                  std::runtime_error);
}

TEST_CASE("exponential coefficient functions match their series and formulas") {
  CHECK(phi1(cplx(0.0)).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(phi2(cplx(0.0)).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi3(cplx(0.0)).real() ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const double e = std::exp(1.0);
  CHECK(phi1(cplx(1.0)).real() == doctest::Approx(e - 1.0).epsilon(1e-14));
  CHECK(phi2(cplx(1.0)).real() == doctest::Approx(e - 2.0).epsilon(1e-13));
  CHECK(phi3(cplx(1.0)).real() == doctest::Approx(e - 2.5).epsilon(1e-13));
  // small-argument regime against the truncated Taylor series
  const cplx z(1e-4, 2e-4);
  const cplx series = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  CHECK(std::abs(phi1(z) - series) < 1e-14);
  // a pure imaginary argument keeps |phi1| sane (the stiff dispersive case)
  CHECK(std::abs(phi1(cplx(0.0, 50.0))) < 1.0);
}

TEST_CASE("planar stepper accepts only the cubic and ode kinds") {
  const Grid2D g = make_grid2(64, 2.0 * kPi);
  const Field2D a = sample2(g, [](double x, double y) {
    return cplx(0.4 + 0.2 * std::cos(x), 0.1 * std::sin(2.0 * y)) *
           std::exp(cplx(0.0, std::sin(x + y)));
  });
  CHECK_THROWS_AS(evolve2(kdv(), a, quiet(1e-3, 0.1)), std::invalid_argument);

  const Trajectory2 to = evolve2(ode_model(), a, quiet(1e-3, 0.25));
  const Field2D ex = nls_ode_solution2(a, 0.25);
  const Field2D fin = to.final_state();
  double err = 0.0;
  for (std::size_t j = 0; j < fin.v.size(); ++j)
    err = std::max(err, std::abs(fin.v[j] - ex.v[j]));
  CHECK(err < 1e-8);

  const Trajectory2 tr = evolve2(nls_torus(-1), a, quiet(1e-3, 0.25));
  REQUIRE(!tr.guard_tripped);
  CHECK(std::abs(l2_mass2(tr.final_state()) - l2_mass2(a)) / l2_mass2(a) <
        1e-12);
  CHECK(std::abs(nls_hamiltonian2(tr.final_state(), -1) -
                 nls_hamiltonian2(a, -1)) /
            std::abs(nls_hamiltonian2(a, -1)) <
        1e-10);
}

TEST_CASE("gauge transforms relate the two modified flows") {
  const Grid1D g = make_grid(256, 1.0);
  const Field1D u0 = sample(g, [](double x) {
    return 0.5 * std::sin(2.0 * kPi * x) + 0.25 * std::cos(4.0 * kPi * x);
  });
  // mean of u^2: 0.5^2/2 + 0.25^2/2
  CHECK(gauge_speed(u0) == doctest::Approx(0.15625).epsilon(1e-13));

  StepControl ctl = quiet(5e-4, 0.1);
  ctl.snapshot_stride = 20;
  const Trajectory tv = evolve(mkdv(), u0, ctl);
  const Trajectory tg = gauge_transform_mkdv(tv, GaugeDirection::kToGauged);
  const Trajectory back = gauge_transform_mkdv(tg, GaugeDirection::kFromGauged);
  for (std::size_t i = 0; i < tv.snaps.size(); ++i)
    CHECK(l2_norm(tv.state(i) - back.state(i)) < 1e-13);

  // the transformed trajectory tracks a direct gauged evolution
  const Trajectory tu = evolve(gauged_mkdv(), u0, ctl);
  CHECK(l2_norm(tg.final_state() - tu.final_state()) < 1e-4);

  // single-state shortcuts invert each other
  const Field1D w = mkdv_to_gauged(u0, 0.37);
  CHECK(l2_norm(gauged_to_mkdv(w, 0.37) - u0) < 1e-13);

  // the trajectory transform is pinned to the unit torus
  const Grid1D g2 = make_grid(64, 2.0);
  Trajectory wrong;
  wrong.grid = g2;
  wrong.times = {0.0};
  wrong.snaps = {coefficients(Field1D(g2))};
  CHECK_THROWS_AS(gauge_transform_mkdv(wrong, GaugeDirection::kToGauged),
                  std::invalid_argument);
}
