#include "displab/spectral/line_norm.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/spectral/fft.hpp"

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kBox = 512.0;        // sampling box for phi-hat
constexpr std::size_t kN = 1u << 17;  // sampling points

// phi-hat(eta + shift) by linear interpolation on the tabulated grid;
// zero outside the table (the spectrum has decayed to machine zero there).
double lookup(const LineSpectrum& sp, double eta) {
  const double lo = sp.eta.front(), hi = sp.eta.back();
  if (eta < lo || eta > hi) return 0.0;
  const double t = (eta - lo) / sp.deta;
  const std::size_t j = static_cast<std::size_t>(t);
  if (j + 1 >= sp.phat.size()) return sp.phat.back();
  const double w = t - static_cast<double>(j);
  return (1.0 - w) * sp.phat[j] + w * sp.phat[j + 1];
}

}  // namespace

LineSpectrum line_spectrum(const BumpProfile& phi) {
  if (phi.outer * 8.0 > kBox)
    throw std::invalid_argument("bump support too wide for the line sampler");
  // Sample centered, transform, then undo the half-box shift: the centering
  // phase at eta_k = 2 pi k / X with X/2 shift is exactly (-1)^k.
  Grid1D g = make_grid(kN, kBox);
  std::vector<cplx> buf(kN);
  for (std::size_t j = 0; j < kN; ++j)
    buf[j] = cplx(phi.value(g.x(j) - 0.5 * kBox), 0.0);
  fft_forward(buf);

  LineSpectrum sp;
  sp.deta = 2.0 * kPi / kBox;
  sp.eta.resize(kN);
  sp.phat.resize(kN);
  // Reorder to ascending eta.
  for (std::size_t j = 0; j < kN; ++j) {
    const long k = g.mode_index(j);
    const std::size_t pos = static_cast<std::size_t>(k + static_cast<long>(kN) / 2);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sp.eta[pos] = g.xi(j);
    sp.phat[pos] = kBox * (sign * buf[j]).real();
  }
  return sp;
}

double modulated_bump_hs_ratio(const LineSpectrum& sp, double s, double Lam,
                               double lambda, double alpha) {
  if (Lam <= 0.0 || lambda <= 0.0)
    throw std::invalid_argument("modulated_bump_hs_ratio: scales must be > 0");
  const double c2a = std::cos(2.0 * alpha);
  const double sep = 2.0 * lambda * Lam;  // spectral distance of the copies
  double acc = 0.0;
  for (std::size_t j = 0; j < sp.eta.size(); ++j) {
    const double u = sp.eta[j];
    const double xi = lambda + u / Lam;
    const double w = std::pow((1.0 + xi * xi) / (lambda * lambda), s);
    double term = sp.phat[j] * sp.phat[j];
    if (sep <= sp.eta.back() - u)  // copies overlap inside the table
      term += c2a * sp.phat[j] * lookup(sp, u + sep);
    acc += w * term;
  }
  acc *= sp.deta / (4.0 * kPi);
  return std::sqrt(std::max(acc, 0.0));
}

double bump_hs_norm(const LineSpectrum& sp, double s, double Lam, double a) {
  double acc = 0.0;
  for (std::size_t j = 0; j < sp.eta.size(); ++j) {
    const double xi = sp.eta[j] / Lam;
    acc += std::pow(1.0 + xi * xi, s) * sp.phat[j] * sp.phat[j];
  }
  acc *= Lam * sp.deta / (2.0 * kPi);
  return std::fabs(a) * std::sqrt(acc);
}

}  // namespace displab
