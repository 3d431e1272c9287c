#pragma once
// Term-by-term L2 audit of an approximate solution's pde residual.

#include <string>
#include <vector>

namespace displab {

struct ResidualReport {
  double scale = 0.0;  // family parameter (lambda, or n)
  std::vector<std::string> term_names;
  std::vector<double> term_l2;
  double total_l2 = 0.0;
  double predicted = 0.0;  // family bound evaluated at this scale
};

}  // namespace displab
