#include "displab/sphere/sht.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/sphere/gauss_legendre.hpp"
#include "displab/spectral/fft.hpp"

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

void check_match(const SphereGrid& a, const SphereGrid& b) {
  if (a.bandwidth != b.bandwidth || a.nlat != b.nlat || a.nlon != b.nlon)
    throw std::invalid_argument("sphere transform: bandwidth mismatch");
}

}  // namespace

SphereGrid make_sphere_grid(std::size_t bandwidth) {
  if (bandwidth == 0)
    throw std::invalid_argument("sphere grid: bandwidth must be positive");
  SphereGrid g;
  g.bandwidth = bandwidth;
  g.nlat = 2 * bandwidth + 2;
  g.nlon = 2 * bandwidth + 2;
  GaussLegendre q = gauss_legendre(g.nlat);
  g.ct = std::move(q.x);
  g.w = std::move(q.w);
  g.st.resize(g.nlat);
  for (std::size_t i = 0; i < g.nlat; ++i)
    g.st[i] = std::sqrt((1.0 - g.ct[i]) * (1.0 + g.ct[i]));
  return g;
}

double HarmonicCoeffs::l2_norm() const {
  double acc = 0.0;
  for (const cplx& z : c) acc += std::norm(z);
  return std::sqrt(acc);
}

double HarmonicCoeffs::sobolev_norm(double s) const {
  double acc = 0.0;
  for (std::size_t l = 0; l <= bandwidth; ++l) {
    const double ld = static_cast<double>(l);
    const double wgt = std::pow(1.0 + ld * (ld + 1.0), s);
    for (long m = -static_cast<long>(l); m <= static_cast<long>(l); ++m)
      acc += wgt * std::norm(at(l, m));
  }
  return std::sqrt(acc);
}

SphereTransform::SphereTransform(const SphereGrid& g) : grid_(g) {
  const std::size_t B = g.bandwidth;
  const std::size_t nlat = g.nlat;

  block_.resize(B + 2);
  block_[0] = 0;
  for (std::size_t m = 0; m <= B; ++m)
    block_[m + 1] = block_[m] + (B + 1 - m) * nlat;
  table_.assign(block_[B + 1], 0.0);

  // Orthonormal recurrences (L^2(S^2) normalization folded in, no
  // Condon-Shortley phase):
  //   Pbar_0^0     = sqrt(1 / 4 pi)
  //   Pbar_m^m     = sqrt((2m+1) / 2m) sin(theta) Pbar_{m-1}^{m-1}
  //   Pbar_{m+1}^m = sqrt(2m+3) cos(theta) Pbar_m^m
  //   Pbar_l^m     = a_l^m (cos(theta) Pbar_{l-1}^m - b_l^m Pbar_{l-2}^m)
  // with a_l^m = sqrt((4l^2-1)/(l^2-m^2)),
  //      b_l^m = sqrt(((l-1)^2-m^2)/(4(l-1)^2-1)).
  for (std::size_t i = 0; i < nlat; ++i) {
    const double x = g.ct[i];
    const double sx = g.st[i];
    double pmm = std::sqrt(1.0 / (4.0 * kPi));
    for (std::size_t m = 0; m <= B; ++m) {
      const double md = static_cast<double>(m);
      if (m > 0) pmm *= sx * std::sqrt((2.0 * md + 1.0) / (2.0 * md));
      double* col = table_.data() + block_[m] + i;
      col[0] = pmm;
      if (m + 1 <= B) {
        double pl1 = pmm;                                    // l-1 value
        double pl = std::sqrt(2.0 * md + 3.0) * x * pmm;     // l value
        col[nlat] = pl;
        for (std::size_t l = m + 2; l <= B; ++l) {
          const double ld = static_cast<double>(l);
          const double a =
              std::sqrt((4.0 * ld * ld - 1.0) / (ld * ld - md * md));
          const double b = std::sqrt(((ld - 1.0) * (ld - 1.0) - md * md) /
                                     (4.0 * (ld - 1.0) * (ld - 1.0) - 1.0));
          const double pn = a * (x * pl - b * pl1);
          col[(l - m) * nlat] = pn;
          pl1 = pl;
          pl = pn;
        }
      }
    }
  }
}

HarmonicCoeffs SphereTransform::forward(const SphereField& u) const {
  check_match(u.grid, grid_);
  const std::size_t B = grid_.bandwidth;
  const std::size_t nlat = grid_.nlat;
  const std::size_t nlon = grid_.nlon;

  // Longitude DFT per latitude row; fft_forward supplies the 1/nlon, so
  // fm(i, m) approximates (1/2pi) integral u(theta_i, phi) e^{-im phi} dphi.
  std::vector<cplx> fm(nlat * nlon);
  std::vector<cplx> row(nlon);
  for (std::size_t i = 0; i < nlat; ++i) {
    for (std::size_t j = 0; j < nlon; ++j) row[j] = u.v[i * nlon + j];
    fft_forward(row);
    for (std::size_t j = 0; j < nlon; ++j) fm[i * nlon + j] = row[j];
  }

  HarmonicCoeffs out(B);
  for (long m = -static_cast<long>(B); m <= static_cast<long>(B); ++m) {
    const std::size_t ma = static_cast<std::size_t>(m < 0 ? -m : m);
    const std::size_t jm =
        static_cast<std::size_t>(m >= 0 ? m : static_cast<long>(nlon) + m);
    const double* tab = table_.data() + block_[ma];
    for (std::size_t l = ma; l <= B; ++l) {
      const double* pl = tab + (l - ma) * nlat;
      cplx acc(0.0, 0.0);
      for (std::size_t i = 0; i < nlat; ++i)
        acc += grid_.w[i] * pl[i] * fm[i * nlon + jm];
      out.at(l, m) = kTwoPi * acc;
    }
  }
  return out;
}

SphereField SphereTransform::inverse(const HarmonicCoeffs& c) const {
  if (c.bandwidth != grid_.bandwidth)
    throw std::invalid_argument("sphere transform: bandwidth mismatch");
  const std::size_t B = grid_.bandwidth;
  const std::size_t nlat = grid_.nlat;
  const std::size_t nlon = grid_.nlon;

  std::vector<cplx> fm(nlat * nlon, cplx(0.0, 0.0));
  for (long m = -static_cast<long>(B); m <= static_cast<long>(B); ++m) {
    const std::size_t ma = static_cast<std::size_t>(m < 0 ? -m : m);
    const std::size_t jm =
        static_cast<std::size_t>(m >= 0 ? m : static_cast<long>(nlon) + m);
    const double* tab = table_.data() + block_[ma];
    for (std::size_t l = ma; l <= B; ++l) {
      const double* pl = tab + (l - ma) * nlat;
      const cplx cc = c.at(l, m);
      if (cc == cplx(0.0, 0.0)) continue;
      for (std::size_t i = 0; i < nlat; ++i) fm[i * nlon + jm] += cc * pl[i];
    }
  }

  SphereField u(grid_);
  std::vector<cplx> row(nlon);
  for (std::size_t i = 0; i < nlat; ++i) {
    for (std::size_t j = 0; j < nlon; ++j) row[j] = fm[i * nlon + j];
    fft_inverse(row);
    for (std::size_t j = 0; j < nlon; ++j) u.v[i * nlon + j] = row[j];
  }
  return u;
}

double sphere_l2_norm(const SphereField& u) {
  const SphereGrid& g = u.grid;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nlat; ++i) {
    double rowsum = 0.0;
    for (std::size_t j = 0; j < g.nlon; ++j)
      rowsum += std::norm(u.v[i * g.nlon + j]);
    acc += g.w[i] * rowsum;
  }
  return std::sqrt(acc * kTwoPi / static_cast<double>(g.nlon));
}

double sphere_lp_norm(const SphereField& u, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& z : u.v) m = std::max(m, std::abs(z));
    return m;
  }
  if (!(p >= 1.0))
    throw std::invalid_argument("sphere_lp_norm: p must be >= 1");
  const SphereGrid& g = u.grid;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nlat; ++i) {
    double rowsum = 0.0;
    for (std::size_t j = 0; j < g.nlon; ++j)
      rowsum += std::pow(std::abs(u.v[i * g.nlon + j]), p);
    acc += g.w[i] * rowsum;
  }
  return std::pow(acc * kTwoPi / static_cast<double>(g.nlon), 1.0 / p);
}

HarmonicCoeffs sphere_laplacian(const HarmonicCoeffs& c) {
  HarmonicCoeffs out(c.bandwidth);
  for (std::size_t l = 0; l <= c.bandwidth; ++l) {
    const double ev = static_cast<double>(l) * (static_cast<double>(l) + 1.0);
    for (long m = -static_cast<long>(l); m <= static_cast<long>(l); ++m)
      out.at(l, m) = ev * c.at(l, m);
  }
  return out;
}

HarmonicCoeffs rotate_about_pole(const HarmonicCoeffs& c, double alpha) {
  HarmonicCoeffs out(c.bandwidth);
  for (std::size_t l = 0; l <= c.bandwidth; ++l)
    for (long m = -static_cast<long>(l); m <= static_cast<long>(l); ++m)
      out.at(l, m) =
          c.at(l, m) * std::exp(cplx(0.0, static_cast<double>(m) * alpha));
  return out;
}

}  // namespace displab
