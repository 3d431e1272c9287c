#include "displab/spectral/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "displab/spectral/bump.hpp"
#include "displab/spectral/fft.hpp"

namespace displab {
namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

Field1D apply_multiplier(const Field1D& u, const MultiplierSpec& spec) {
  std::vector<cplx> c = coefficients(u);
  const std::size_t nyq = u.grid.n / 2;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == nyq && spec.parity == MultiplierSpec::Parity::kOdd) {
      c[j] = 0.0;
      continue;
    }
    c[j] *= spec.symbol(u.grid.xi(j));
  }
  return from_coefficients(u.grid, std::move(c));
}

Field1D derivative(const Field1D& u, int order) {
  MultiplierSpec spec;
  spec.symbol = [order](double xi) {
    return std::pow(cplx(0.0, xi), order);
  };
  spec.parity = (order % 2) ? MultiplierSpec::Parity::kOdd
                            : MultiplierSpec::Parity::kEven;
  return apply_multiplier(u, spec);
}

Field1D hilbert_transform(const Field1D& u) {
  MultiplierSpec spec;
  spec.symbol = [](double xi) { return cplx(0.0, -sign(xi)); };
  spec.parity = MultiplierSpec::Parity::kOdd;
  return apply_multiplier(u, spec);
}

Field1D bracket_power(const Field1D& u, double s) {
  MultiplierSpec spec;
  spec.symbol = [s](double xi) {
    return cplx(std::pow(1.0 + xi * xi, 0.5 * s), 0.0);
  };
  spec.parity = MultiplierSpec::Parity::kEven;
  return apply_multiplier(u, spec);
}

double sobolev_norm(const Field1D& u, double s) {
  const std::vector<cplx> c = coefficients(u);
  double acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double xi = u.grid.xi(j);
    acc += std::pow(1.0 + xi * xi, s) * std::norm(c[j]);
  }
  return std::sqrt(u.grid.length * acc);
}

double lp_norm(const Field1D& u, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : u.v) m = std::max(m, std::abs(z));
    return m;
  }
  if (p <= 0.0) throw std::invalid_argument("lp_norm: p must be positive");
  double acc = 0.0;
  for (const auto& z : u.v) acc += std::pow(std::abs(z), p);
  return std::pow(acc * u.grid.dx(), 1.0 / p);
}

double l2_norm(const Field1D& u) {
  double acc = 0.0;
  for (const auto& z : u.v) acc += std::norm(z);
  return std::sqrt(acc * u.grid.dx());
}

double littlewood_paley_weight(double band, double xi) {
  if (band < 1.0) throw std::invalid_argument("dyadic band must be >= 1");
  if (band == 1.0) return smooth_cutoff(xi);
  return smooth_cutoff(xi / band) - smooth_cutoff(2.0 * xi / band);
}

Field1D littlewood_paley_project(const Field1D& u, double band) {
  MultiplierSpec spec;
  spec.symbol = [band](double xi) {
    return cplx(littlewood_paley_weight(band, xi), 0.0);
  };
  spec.parity = MultiplierSpec::Parity::kEven;
  return apply_multiplier(u, spec);
}

Field1D mollify(const Field1D& u, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("mollify: eps must be positive");
  MultiplierSpec spec;
  spec.symbol = [eps](double xi) { return cplx(smooth_cutoff(eps * xi), 0.0); };
  spec.parity = MultiplierSpec::Parity::kEven;
  return apply_multiplier(u, spec);
}

Field1D band_project(const Field1D& u, double xi_lo, double xi_hi) {
  MultiplierSpec spec;
  spec.symbol = [xi_lo, xi_hi](double xi) {
    const double a = std::fabs(xi);
    return cplx((a >= xi_lo && a <= xi_hi) ? 1.0 : 0.0, 0.0);
  };
  spec.parity = MultiplierSpec::Parity::kEven;
  return apply_multiplier(u, spec);
}

Field1D spectral_shift(const Field1D& u, double shift) {
  MultiplierSpec spec;
  spec.symbol = [shift](double xi) {
    return std::exp(cplx(0.0, -xi * shift));
  };
  spec.parity = MultiplierSpec::Parity::kNone;
  return apply_multiplier(u, spec);
}

void dealias_two_thirds(std::vector<cplx>& coeffs) {
  const std::size_t n = coeffs.size();
  const long cut = static_cast<long>(n) / 3;
  for (std::size_t j = 0; j < n; ++j) {
    const long h = static_cast<long>(n) / 2;
    const long k = static_cast<long>(j) < h ? static_cast<long>(j)
                                            : static_cast<long>(j) -
                                                  static_cast<long>(n);
    if (std::labs(k) > cut) coeffs[j] = 0.0;
  }
}

Field1D dealias_two_thirds(const Field1D& u) {
  std::vector<cplx> c = coefficients(u);
  dealias_two_thirds(c);
  return from_coefficients(u.grid, std::move(c));
}

Field1D spectral_upsample(const Field1D& u, const Grid1D& fine) {
  if (std::fabs(fine.length - u.grid.length) > 1e-12 * u.grid.length)
    throw std::invalid_argument("spectral_upsample: box lengths differ");
  if (fine.n < u.grid.n)
    throw std::invalid_argument("spectral_upsample: target grid is coarser");
  const std::vector<cplx> c = coefficients(u);
  std::vector<cplx> cf(fine.n, cplx(0.0, 0.0));
  const long half = static_cast<long>(u.grid.n) / 2;
  for (std::size_t j = 0; j < u.grid.n; ++j) {
    const long k = u.grid.mode_index(j);
    if (k == -half) continue;  // unpaired Nyquist bin stays behind
    const std::size_t pos = k >= 0
                                ? static_cast<std::size_t>(k)
                                : fine.n - static_cast<std::size_t>(-k);
    cf[pos] = c[j];
  }
  return from_coefficients(fine, std::move(cf));
}

double spectral_tail_fraction(const Field1D& u) {
  const std::vector<cplx> c = coefficients(u);
  const long n = static_cast<long>(u.grid.n);
  const long keep = n / 3;  // retained band under the 2/3 rule
  double peak = 0.0, tail = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long h = n / 2;
    const long k = static_cast<long>(j) < h
                       ? static_cast<long>(j)
                       : static_cast<long>(j) - n;
    const double a = std::abs(c[j]);
    peak = std::max(peak, a);
    if (4 * std::labs(k) > 3 * keep && std::labs(k) <= keep)
      tail = std::max(tail, a);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

double kato_ponce_ratio(const Field1D& f, const Field1D& g, double s) {
  if (s < 1.0) throw std::invalid_argument("kato_ponce_ratio: s must be >= 1");
  f.check_compatible(g);
  if (max_imag(f) > 1e-12 * (1.0 + lp_norm(f, INFINITY)))
    throw std::invalid_argument("kato_ponce_ratio: f must be real");

  const Field1D fg = pointwise_mul(f, g);
  const Field1D comm = bracket_power(fg, s) - pointwise_mul(f, bracket_power(g, s));
  const double num = l2_norm(comm);
  const double den = lp_norm(derivative(f, 1), INFINITY) *
                         l2_norm(bracket_power(g, s - 1.0)) +
                     sobolev_norm(f, s) * lp_norm(g, INFINITY);
  if (den == 0.0) throw std::invalid_argument("kato_ponce_ratio: zero inputs");
  return num / den;
}

Field1D scaling_transform(const Field1D& u, double lambda, ScalingDir dir) {
  if (lambda <= 0.0)
    throw std::invalid_argument("scaling_transform: lambda must be positive");
  Grid1D g;
  const double a = dir == ScalingDir::kSpread ? lambda : 1.0 / lambda;
  g = make_grid(u.grid.n, u.grid.length * a);
  Field1D out(g);
  const double amp = 1.0 / a;
  for (std::size_t j = 0; j < u.v.size(); ++j) out[j] = amp * u.v[j];
  return out;
}

void project_real(Field1D& u) {
  for (auto& z : u.v) z = cplx(z.real(), 0.0);
}

double max_imag(const Field1D& u) {
  double m = 0.0;
  for (const auto& z : u.v) m = std::max(m, std::fabs(z.imag()));
  return m;
}

}  // namespace displab
