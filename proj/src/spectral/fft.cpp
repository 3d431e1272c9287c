#include "displab/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <stdexcept>
#include <tuple>

namespace displab {
namespace {

// Key: (size0, size1, sign).  size1 == 0 marks a 1-d plan.
using PlanKey = std::tuple<std::size_t, std::size_t, int>;

fftw_plan get_plan(std::size_t n0, std::size_t n1, int sign) {
  static std::map<PlanKey, fftw_plan> cache;
  const PlanKey key{n0, n1, sign};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Plan on a scratch buffer; FFTW_UNALIGNED lets us execute on caller
  // buffers regardless of their alignment.
  std::vector<cplx> scratch(n1 == 0 ? n0 : n0 * n1);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan =
      n1 == 0
          ? fftw_plan_dft_1d(static_cast<int>(n0), ptr, ptr, sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED)
          : fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), ptr,
                             ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan) throw std::runtime_error("fftw planning failed");
  cache.emplace(key, plan);
  return plan;
}

void execute(std::vector<cplx>& data, std::size_t n0, std::size_t n1,
             int sign) {
  if (data.size() != (n1 == 0 ? n0 : n0 * n1))
    throw std::invalid_argument("fft buffer size mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(n0, n1, sign), ptr, ptr);
}

}  // namespace

void fft_forward(std::vector<cplx>& data) {
  const std::size_t n = data.size();
  execute(data, n, 0, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& z : data) z *= scale;
}

void fft_inverse(std::vector<cplx>& data) {
  execute(data, data.size(), 0, FFTW_BACKWARD);
}

void fft_forward_2d(std::vector<cplx>& data, std::size_t n0, std::size_t n1) {
  execute(data, n0, n1, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(n0 * n1);
  for (auto& z : data) z *= scale;
}

void fft_inverse_2d(std::vector<cplx>& data, std::size_t n0, std::size_t n1) {
  execute(data, n0, n1, FFTW_BACKWARD);
}

std::vector<cplx> coefficients(const Field1D& f) {
  std::vector<cplx> c = f.v;
  fft_forward(c);
  return c;
}

Field1D from_coefficients(const Grid1D& g, std::vector<cplx> coeffs) {
  if (coeffs.size() != g.n)
    throw std::invalid_argument("coefficient count does not match grid");
  fft_inverse(coeffs);
  Field1D out(g);
  out.v = std::move(coeffs);
  return out;
}

}  // namespace displab
