#include "displab/sphere/gauss_legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace displab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// P_m and P_{m-1} at x by the three-term recurrence.
void legendre_pair(std::size_t m, double x, double& pm, double& pm1) {
  double p0 = 1.0, p1 = x;
  for (std::size_t l = 2; l <= m; ++l) {
    const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
    p0 = p1;
    p1 = p2;
  }
  pm = p1;
  pm1 = p0;
}

}  // namespace

GaussLegendre gauss_legendre(std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussLegendre q;
  q.x.assign(m, 0.0);
  q.w.assign(m, 0.0);

  if (m == 1) {
    q.x[0] = 0.0;
    q.w[0] = 2.0;
    return q;
  }

  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < m / 2; ++i) {
    // i-th root from the left; the Chebyshev angle is a good starting guess
    double x = -std::cos(kPi * (static_cast<double>(i) + 0.75) / (md + 0.5));
    double pm = 0.0, pm1 = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(m, x, pm, pm1);
      dp = md * (x * pm - pm1) / (x * x - 1.0);
      const double dx = pm / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre_pair(m, x, pm, pm1);
    dp = md * (x * pm - pm1) / (x * x - 1.0);
    q.x[i] = x;
    q.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    q.x[m - 1 - i] = -x;
    q.w[m - 1 - i] = q.w[i];
  }

  if (m % 2 == 1) {
    // middle root is exactly 0 for odd m
    double pm = 0.0, pm1 = 0.0;
    legendre_pair(m, 0.0, pm, pm1);
    const double dp = md * pm1;  // P_m'(0) = m (0*P_m - P_{m-1}) / (0 - 1)
    q.x[m / 2] = 0.0;
    q.w[m / 2] = 2.0 / (dp * dp);
  }
  return q;
}

}  // namespace displab
