#pragma once
// Thin FFTW wrapper with a process-wide plan cache.
//
// Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED so that planning is
// deterministic and a cached plan can be executed on any buffer of the right
// size (new-array execution).  Forward transforms are scaled by 1/n so they
// produce the coefficient convention documented in grid.hpp.

#include <complex>
#include <cstddef>
#include <vector>

#include "displab/spectral/grid.hpp"

namespace displab {

// In-place forward DFT (analysis): data[j] -> c_k, including the 1/n factor.
void fft_forward(std::vector<cplx>& data);
// In-place inverse DFT (synthesis): c_k -> data[j], no extra scaling.
void fft_inverse(std::vector<cplx>& data);

// 2-d transforms on row-major n0 x n1 data, same scaling conventions.
void fft_forward_2d(std::vector<cplx>& data, std::size_t n0, std::size_t n1);
void fft_inverse_2d(std::vector<cplx>& data, std::size_t n0, std::size_t n1);

// Coefficient view of a field (copy), and its inverse.
std::vector<cplx> coefficients(const Field1D& f);
Field1D from_coefficients(const Grid1D& g, std::vector<cplx> coeffs);

}  // namespace displab
