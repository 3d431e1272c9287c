#include <cmath>
#include <complex>
#include <vector>

#include "displab/spectral/bump.hpp"
#include "displab/spectral/fft.hpp"
#include "displab/spectral/grid.hpp"
#include "displab/spectral/grid2.hpp"
#include "displab/spectral/line_norm.hpp"
#include "displab/spectral/ops.hpp"
#include "doctest.h"

using namespace displab;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Field1D mode(const Grid1D& g, long k, cplx amp = cplx(1.0, 0.0)) {
  const double xi = 2.0 * kPi * static_cast<double>(k) / g.length;
  return sample_complex(g, [&](double x) {
    return amp * std::exp(cplx(0.0, xi * x));
  });
}

double max_abs_diff(const Field1D& a, const Field1D& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace

TEST_CASE("make_grid rejects bad requests") {
  CHECK_THROWS_AS(make_grid(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(7, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, -2.0), std::invalid_argument);
}

TEST_CASE("mode indices wrap at the Nyquist bin") {
  const Grid1D g = make_grid(8, 4.0);
  CHECK(g.mode_index(0) == 0);
  CHECK(g.mode_index(3) == 3);
  CHECK(g.mode_index(4) == -4);
  CHECK(g.mode_index(7) == -1);
  CHECK(g.xi(1) == doctest::Approx(2.0 * kPi / 4.0).epsilon(1e-15));
  CHECK(g.xi_max() == doctest::Approx(kPi * 8.0 / 4.0).epsilon(1e-15));
}

TEST_CASE("forward transform isolates a pure mode") {
  const Grid1D g = make_grid(64, 5.0);
  const std::vector<cplx> c = coefficients(mode(g, 3, cplx(0.25, -0.5)));
  for (std::size_t j = 0; j < g.n; ++j) {
    const cplx want = g.mode_index(j) == 3 ? cplx(0.25, -0.5) : cplx(0.0, 0.0);
    CHECK(std::abs(c[j] - want) < 1e-14);
  }
}

TEST_CASE("transform round trip and Parseval") {
  const Grid1D g = make_grid(128, 3.0);
  const Field1D u = sample_complex(g, [&](double x) {
    return std::exp(cplx(0.0, 2.0 * kPi * x / 3.0)) /
           (2.0 + std::cos(2.0 * kPi * x / 3.0));
  });
  const Field1D back = from_coefficients(g, coefficients(u));
  CHECK(max_abs_diff(u, back) < 1e-14);

  double nodal = 0.0;
  for (std::size_t j = 0; j < g.n; ++j) nodal += std::norm(u[j]);
  nodal *= g.dx();
  double spectral = 0.0;
  for (const cplx& z : coefficients(u)) spectral += std::norm(z);
  spectral *= g.length;
  CHECK(nodal == doctest::Approx(spectral).epsilon(1e-13));
  CHECK(l2_norm(u) == doctest::Approx(std::sqrt(nodal)).epsilon(1e-13));
  CHECK(sobolev_norm(u, 0.0) == doctest::Approx(l2_norm(u)).epsilon(1e-13));
}

TEST_CASE("derivative and Hilbert transform act on trigonometric data") {
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const Field1D u = sample(g, [](double x) { return std::sin(3.0 * x); });
  const Field1D du = derivative(u);
  const Field1D want = sample(g, [](double x) { return 3.0 * std::cos(3.0 * x); });
  CHECK(max_abs_diff(du, want) < 1e-12);

  const Field1D ddu = derivative(u, 2);
  const Field1D want2 = sample(g, [](double x) { return -9.0 * std::sin(3.0 * x); });
  CHECK(max_abs_diff(ddu, want2) < 1e-12);

  // H cos(kx) = sin(kx) for k > 0 with the -i sgn(xi) symbol.
  const Field1D c = sample(g, [](double x) { return std::cos(5.0 * x); });
  const Field1D hc = hilbert_transform(c);
  const Field1D want3 = sample(g, [](double x) { return std::sin(5.0 * x); });
  CHECK(max_abs_diff(hc, want3) < 1e-12);
}

TEST_CASE("odd multipliers zero the Nyquist bin") {
  const Grid1D g = make_grid(16, 2.0 * kPi);
  Field1D u(g);
  // pure Nyquist content: alternating +-1
  for (std::size_t j = 0; j < g.n; ++j) u[j] = (j % 2 == 0) ? 1.0 : -1.0;
  const Field1D du = derivative(u);
  for (std::size_t j = 0; j < g.n; ++j) CHECK(std::abs(du[j]) < 1e-14);
  CHECK(max_imag(derivative(sample(g, [](double x) { return std::sin(x); }))) <
        1e-14);
}

TEST_CASE("sobolev norm of a single mode matches the closed form") {
  const Grid1D g = make_grid(64, 5.0);
  const double xi = 2.0 * kPi * 7.0 / 5.0;
  const Field1D u = mode(g, 7, cplx(0.5, 0.25));
  const double want =
      std::sqrt(5.0 * std::pow(1.0 + xi * xi, 1.3) * std::norm(cplx(0.5, 0.25)));
  CHECK(sobolev_norm(u, 1.3) == doctest::Approx(want).epsilon(1e-13));
  // bracket_power at s = 0 is the identity
  CHECK(max_abs_diff(bracket_power(u, 0.0), u) < 1e-14);
}

TEST_CASE("lp norms on a constant field") {
  const Grid1D g = make_grid(32, 7.0);
  const Field1D u = sample(g, [](double) { return 2.0; });
  CHECK(lp_norm(u, 1.0) == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(lp_norm(u, 2.0) == doctest::Approx(2.0 * std::sqrt(7.0)).epsilon(1e-14));
  CHECK(lp_norm(u, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(u, 0.0), std::invalid_argument);
}

TEST_CASE("dyadic weights form a partition of the identity") {
  for (double xi : {0.0, 0.7, 1.0, 3.2, 17.0, 250.0}) {
    double acc = 0.0;
    for (double band = 1.0; band <= 1024.0; band *= 2.0)
      acc += littlewood_paley_weight(band, xi);
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
  }
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const Field1D u = sample(g, [](double x) {
    return std::sin(x) + 0.3 * std::cos(9.0 * x) + 0.1 * std::sin(30.0 * x);
  });
  Field1D acc(g);
  for (double band = 1.0; band <= 64.0; band *= 2.0)
    acc += littlewood_paley_project(u, band);
  CHECK(max_abs_diff(acc, u) < 1e-13);
}

TEST_CASE("mollifier passes low modes bit for bit") {
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const Field1D u = sample(g, [](double x) {
    return std::sin(2.0 * x) + 0.25 * std::cos(40.0 * x);
  });
  // cutoff(eps xi) = 1 for |xi| <= 1/eps, so eps = 1/4 keeps |k| <= 4
  // untouched (up to the synthesis round trip) and kills |k| >= 8
  const std::vector<cplx> cu = coefficients(u);
  const std::vector<cplx> cm = coefficients(mollify(u, 0.25));
  for (std::size_t j = 0; j < g.n; ++j) {
    const long k = std::labs(g.mode_index(j));
    if (k <= 4) {
      CHECK(std::abs(cm[j] - cu[j]) < 1e-15);
    } else if (k >= 8) {
      CHECK(std::abs(cm[j]) < 1e-15);
    }
  }
}

TEST_CASE("band projection keeps the requested annulus") {
  const Grid1D g = make_grid(64, 2.0 * kPi);
  const Field1D u = sample(g, [](double x) {
    return std::cos(2.0 * x) + std::cos(10.0 * x);
  });
  const Field1D hi = band_project(u, 5.0, 1e9);
  const Field1D want = sample(g, [](double x) { return std::cos(10.0 * x); });
  CHECK(max_abs_diff(hi, want) < 1e-13);
}

TEST_CASE("spectral shift translates band-limited fields exactly") {
  const Grid1D g = make_grid(64, 2.0 * kPi);
  const Field1D u = sample(g, [](double x) {
    return std::sin(x) + 0.5 * std::cos(3.0 * x);
  });
  const Field1D shifted = spectral_shift(u, 0.37);
  const Field1D want = sample(g, [](double x) {
    return std::sin(x - 0.37) + 0.5 * std::cos(3.0 * (x - 0.37));
  });
  CHECK(max_abs_diff(shifted, want) < 1e-13);
}

TEST_CASE("two-thirds dealiasing zeroes the top band") {
  const Grid1D g = make_grid(32, 2.0 * kPi);
  Field1D all = sample(g, [](double x) {
    return std::cos(3.0 * x) + std::cos(14.0 * x);
  });
  // the coefficient-space overload masks in place, exactly
  std::vector<cplx> c = coefficients(all);
  dealias_two_thirds(c);
  for (std::size_t j = 0; j < g.n; ++j) {
    const long k = std::labs(g.mode_index(j));
    if (k > 10) CHECK(std::abs(c[j]) == 0.0);
  }
  // |k| = 3 survives untouched through the field overload
  const Field1D kept = sample(g, [](double x) { return std::cos(3.0 * x); });
  CHECK(max_abs_diff(dealias_two_thirds(kept), kept) < 1e-14);
}

TEST_CASE("spectral upsampling is exact on band-limited fields") {
  const Grid1D coarse = make_grid(32, 4.0);
  const Grid1D fine = make_grid(128, 4.0);
  const Field1D u = sample(coarse, [](double x) {
    return std::sin(2.0 * kPi * x / 4.0) + 0.2 * std::cos(6.0 * kPi * x / 4.0);
  });
  const Field1D up = spectral_upsample(u, fine);
  const Field1D want = sample(fine, [](double x) {
    return std::sin(2.0 * kPi * x / 4.0) + 0.2 * std::cos(6.0 * kPi * x / 4.0);
  });
  CHECK(max_abs_diff(up, want) < 1e-13);
  CHECK_THROWS_AS(spectral_upsample(u, make_grid(16, 4.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral_upsample(u, make_grid(128, 5.0)),
                  std::invalid_argument);
}

TEST_CASE("tail fraction flags band-edge content") {
  const Grid1D g = make_grid(96, 2.0 * kPi);  // retained band |k| <= 32
  const Field1D low = sample(g, [](double x) { return std::cos(2.0 * x); });
  CHECK(spectral_tail_fraction(low) < 1e-14);
  const Field1D edgy = sample(g, [](double x) {
    return std::cos(2.0 * x) + 1e-3 * std::cos(30.0 * x);
  });
  CHECK(spectral_tail_fraction(edgy) == doctest::Approx(1e-3).epsilon(1e-10));
}

TEST_CASE("scaling transform round trips and rescales the L2 norm") {
  const Grid1D g = make_grid(64, 2.0 * kPi);
  const Field1D v = sample(g, [](double x) { return std::sin(x) + 2.0; });
  const double lam = 4.0;
  const Field1D u = scaling_transform(v, lam, ScalingDir::kSpread);
  CHECK(u.grid.length == doctest::Approx(lam * g.length).epsilon(1e-15));
  // u(x) = lam^{-1} v(x / lam), so ||u||_2 = lam^{-1/2} ||v||_2
  CHECK(l2_norm(u) ==
        doctest::Approx(l2_norm(v) / std::sqrt(lam)).epsilon(1e-13));
  const Field1D back = scaling_transform(u, lam, ScalingDir::kFocus);
  CHECK(max_abs_diff(back, v) < 1e-13);
}

TEST_CASE("commutator ratio guards its inputs") {
  const Grid1D g = make_grid(128, 2.0 * kPi);
  const Field1D f = sample(g, [](double x) { return std::sin(x); });
  const Field1D h = sample(g, [](double x) { return std::cos(2.0 * x); });
  CHECK_THROWS_AS(kato_ponce_ratio(f, h, 0.5), std::invalid_argument);
  const double r = kato_ponce_ratio(f, h, 2.0);
  CHECK(r > 0.0);
  CHECK(r < 10.0);
}

TEST_CASE("pointwise product multiplies node by node") {
  const Grid1D g = make_grid(16, 1.0);
  const Field1D a = sample(g, [](double x) { return 1.0 + x; });
  const Field1D b = sample(g, [](double x) { return 2.0 - x; });
  const Field1D ab = pointwise_mul(a, b);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    CHECK(std::abs(ab[j] - cplx((1.0 + x) * (2.0 - x), 0.0)) < 1e-15);
  }
  const Field1D other(make_grid(32, 1.0));
  CHECK_THROWS_AS(pointwise_mul(a, other), std::invalid_argument);
}

TEST_CASE("bump profiles have exact plateaus and supports") {
  for (BumpKind kind : {BumpKind::kCompactPolynomial, BumpKind::kCosineTaper,
                        BumpKind::kGaussianTruncated}) {
    const BumpProfile b = make_bump(kind, 1.0, 2.0);
    CHECK(b.value(0.0) == 1.0);
    CHECK(b.value(0.999) == 1.0);
    CHECK(b.value(-1.0) == 1.0);
    CHECK(b.value(2.0) == 0.0);
    CHECK(b.value(-5.0) == 0.0);
    const double mid = b.value(1.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    CHECK(b.value(1.5) == b.value(-1.5));
  }
  CHECK(smooth_cutoff(0.5) == 1.0);
  CHECK(smooth_cutoff(2.0) == 0.0);
  CHECK(smooth_cutoff(-3.0) == 0.0);
}

TEST_CASE("bump L2 norm agrees with dense trapezoid quadrature") {
  const BumpProfile b = make_bump(BumpKind::kCompactPolynomial, 1.0, 2.0);
  const std::size_t m = 400000;
  const double h = 4.4 / static_cast<double>(m);
  double acc = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const double x = -2.2 + h * static_cast<double>(j);
    const double v = b.value(x);
    acc += (j == 0 || j == m ? 0.5 : 1.0) * v * v;
  }
  CHECK(b.l2_norm() == doctest::Approx(std::sqrt(acc * h)).epsilon(1e-8));
}

TEST_CASE("line quadrature matches the periodic Sobolev norm of a dilate") {
  // a phi(x / Lam) sampled in a box much wider than its support
  const BumpProfile phi = make_bump(BumpKind::kCompactPolynomial, 1.0, 2.0);
  const LineSpectrum sp = line_spectrum(phi);
  const double Lam = 3.0, a = 0.7;
  const Grid1D g = make_grid(4096, 64.0);
  const Field1D u = sample(g, [&](double x) {
    return a * phi.value((x - 32.0) / Lam);
  });
  for (double s : {0.0, 1.0, 1.6}) {
    CHECK(bump_hs_norm(sp, s, Lam, a) ==
          doctest::Approx(sobolev_norm(u, s)).epsilon(1e-6));
  }
  // s = 0 reduces to the plain L2 norm of the dilate
  CHECK(bump_hs_norm(sp, 0.0, Lam, a) ==
        doctest::Approx(a * std::sqrt(Lam) * phi.l2_norm()).epsilon(1e-9));
}

TEST_CASE("planar grid transforms round trip") {
  const Grid2D g = make_grid2(32, 2.0 * kPi);
  const Field2D u = sample2(g, [](double x, double y) {
    return cplx(std::sin(x) * std::cos(2.0 * y), std::cos(x + y));
  });
  Field2D w = u;
  fft2_forward(w);
  fft2_inverse(w);
  double m = 0.0;
  for (std::size_t j = 0; j < u.v.size(); ++j)
    m = std::max(m, std::abs(w.v[j] - u.v[j]));
  CHECK(m < 1e-13);
  CHECK(sobolev_norm2(u, 0.0) == doctest::Approx(l2_norm2(u)).epsilon(1e-13));
  CHECK_THROWS_AS(make_grid2(15, 1.0), std::invalid_argument);
}

TEST_CASE("planar Sobolev norm of a single mode matches the closed form") {
  const Grid2D g = make_grid2(32, 4.0);
  const double xi0 = 2.0 * kPi * 3.0 / 4.0, xi1 = 2.0 * kPi * 1.0 / 4.0;
  const Field2D u = sample2(g, [&](double x, double y) {
    return std::exp(cplx(0.0, xi0 * x + xi1 * y));
  });
  const double want =
      std::sqrt(16.0 * std::pow(1.0 + xi0 * xi0 + xi1 * xi1, 0.75));
  CHECK(sobolev_norm2(u, 0.75) == doctest::Approx(want).epsilon(1e-12));
  const double e = semiclassical_energy2(u, 8.0, 0.5, 2);
  const double l2 = l2_norm2(u);
  const double h2 = sobolev_norm2(u, 2.0);
  CHECK(e == doctest::Approx(std::sqrt(std::pow(8.0, 1.0) * l2 * l2 +
                                       std::pow(8.0, -3.0) * h2 * h2))
                 .epsilon(1e-12));
}
