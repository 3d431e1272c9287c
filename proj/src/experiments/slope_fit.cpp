#include "displab/experiments/slope_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace displab {

SlopeFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("fit_power_law: length mismatch");
  if (xs.size() < 3)
    throw std::invalid_argument("fit_power_law: need at least 3 points");

  SlopeFit fit;
  fit.x = xs;
  fit.logy.resize(ys.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("fit_power_law: inputs must be positive");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    fit.logy[i] = ly;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(xs.size());
  const double det = n * sxx - sx * sx;
  if (!(std::fabs(det) > 0.0))
    throw std::invalid_argument("fit_power_law: degenerate abscissae");
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;

  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = fit.logy[i] - (fit.intercept + fit.slope * std::log(xs[i]));
    rss += r * r;
  }
  fit.residual_rms = std::sqrt(rss / n);
  return fit;
}

SlopeFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys, double predicted,
                       double tolerance) {
  SlopeFit fit = fit_power_law(xs, ys);
  fit.predicted = predicted;
  fit.tolerance = tolerance;
  fit.pass = std::fabs(fit.slope - predicted) <= tolerance;
  return fit;
}

}  // namespace displab
