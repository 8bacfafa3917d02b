#pragma once

#include <vector>

#include "roughpot/common.hpp"

namespace rpot::fft {

// Unnormalized c2c DFT over a d-dimensional n0 x ... x n_{d-1} array
// (row-major). forward uses e^{-i x xi}, backward e^{+i x xi}; backed by
// FFTW with a process-wide plan cache. Safe to call concurrently.
void forward(const std::vector<int>& dims, cplx* data);
void backward(const std::vector<int>& dims, cplx* data);

}  // namespace rpot::fft
