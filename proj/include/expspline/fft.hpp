#pragma once

#include <cstddef>
#include <vector>

#include "expspline/types.hpp"

namespace expspline {

/// In-place radix-2 FFT; size must be a power of two.
/// sign = -1 gives the forward transform sum f[k] e^{-2pi i jk/N},
/// sign = +1 the unnormalized inverse.
void fft_pow2(std::vector<Cplx>& data, int sign);

/// DFT of arbitrary length (Bluestein's chirp algorithm on top of fft_pow2).
/// Forward (sign = -1): X[j] = sum_k x[k] e^{-2pi i jk/N}. Unnormalized.
std::vector<Cplx> dft(const std::vector<Cplx>& x, int sign);

/// Inverse DFT including the 1/N normalization.
std::vector<Cplx> idft(const std::vector<Cplx>& x);

} // namespace expspline
