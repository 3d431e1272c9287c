#pragma once
// Exponential-integrator coefficient functions
//   phi1(z) = (e^z - 1)/z
//   phi2(z) = (e^z - 1 - z)/z^2
//   phi3(z) = (e^z - 1 - z - z^2/2)/z^3
// evaluated so that the small-|z| cancellation never surfaces: Taylor series
// near zero, a 32-point circle mean for moderate |z|, direct formulas beyond.

#include <complex>

namespace displab {

std::complex<double> phi1(std::complex<double> z);
std::complex<double> phi2(std::complex<double> z);
std::complex<double> phi3(std::complex<double> z);

}  // namespace displab
