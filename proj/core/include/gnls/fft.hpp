#pragma once

#include <complex>
#include <vector>

namespace gnls::fft {

using cvec = std::vector<std::complex<double>>;

/// Unnormalized DFT over a row-major array of the given extents (rank 1-3),
/// sign -1 in the exponent: X_k = sum_j x_j e^{-2pi i j.k/N}.
cvec forward(const cvec& in, const std::vector<int>& dims);

/// Unnormalized inverse DFT, sign +1 in the exponent (no 1/N factor).
cvec backward(const cvec& in, const std::vector<int>& dims);

}  // namespace gnls::fft
