#pragma once

#include <complex>
#include <vector>

namespace slicesum {

// In-place iterative radix-2 FFT; data.size() must be a power of two.
// Forward: X_k = sum_m x_m exp(-2 pi i k m / n). Inverse includes the 1/n.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace slicesum
