#pragma once
// Log-log power-law fitting.  Every scaling claim in the experiment suites
// is reduced to one of these: a least-squares slope over dyadic parameter
// values, stored next to the exponent the family predicts, with the pass
// flag decided here and nowhere deeper in the library.

#include <cstddef>
#include <string>
#include <vector>

namespace displab {

struct SlopeFit {
  std::vector<double> x;     // raw abscissae (not logged)
  std::vector<double> logy;  // log of the fitted values
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;  // RMS of log residuals about the fit
  double predicted = 0.0;     // exponent the family claims
  double tolerance = 0.0;     // 0 disables the flag
  bool pass = true;           // |slope - predicted| <= tolerance
  bool valid = true;          // false when a point had to be discarded
};

// Least squares in log-log; throws on fewer than 3 points or nonpositive
// inputs.
SlopeFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys);

// Same, then records the predicted exponent and sets the pass flag at the
// given tolerance.
SlopeFit fit_power_law(const std::vector<double>& xs,
                       const std::vector<double>& ys, double predicted,
                       double tolerance);

}  // namespace displab
