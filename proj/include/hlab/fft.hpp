#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hlab::fft {

using cvec = std::vector<std::complex<double>>;

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// In-place DFT of arbitrary length (radix-2 for powers of two, Bluestein
// otherwise). Forward: X_k = sum_m x_m e^{-2 pi i m k / N}. Inverse applies
// the conjugate kernel and divides by N.
void transform(cvec& a, bool inverse);

}  // namespace hlab::fft
