#pragma once

#include <vector>

#include "szego/common.hpp"

namespace szego {

bool is_power_of_two(std::size_t n);

/// In-place radix-2 FFT, X_k = sum_j x_j e^{-2 pi i jk/M}. Size must be a
/// power of two.
void fft(std::vector<cplx>& a);

/// Unnormalized inverse transform, x_j = sum_k X_k e^{+2 pi i jk/M}.
/// fft followed by ifft_unnormalized multiplies by the size.
void ifft_unnormalized(std::vector<cplx>& a);

}  // namespace szego
