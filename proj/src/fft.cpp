#include "hlab/fft.hpp"

#include <cmath>
#include <numbers>

namespace hlab::fft {

namespace {

constexpr double kPi = std::numbers::pi;

void bit_reverse_permute(cvec& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
}

// Iterative radix-2 Cooley-Tukey; length must be a power of two.
void fft_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    bit_reverse_permute(a);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const std::size_t half = len >> 1;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> w =
                    std::polar(1.0, ang * static_cast<double>(k));
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Chirp phase e^{+- i pi m^2 / N} with the square reduced mod 2N in exact
// integer arithmetic, which keeps the phase accurate for large m.
std::complex<double> chirp(std::uint64_t m, std::uint64_t n, bool positive) {
    const std::uint64_t q = (m % (2 * n)) * (m % (2 * n)) % (2 * n);
    const double ang = kPi * static_cast<double>(q) / static_cast<double>(n);
    return std::polar(1.0, positive ? ang : -ang);
}

// Bluestein's algorithm: DFT of arbitrary length via one pow2 convolution.
// e^{-2pi i mk/N} = e^{-i pi m^2/N} e^{-i pi k^2/N} e^{+i pi (k-m)^2/N}.
void fft_bluestein(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    const std::size_t m = next_pow2(2 * n - 1);
    const bool pos = inverse;  // kernel chirp sign
    cvec u(m, {0.0, 0.0}), v(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp(k, n, pos);
    for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> c = chirp(k, n, !pos);
        v[k] = c;
        if (k > 0) v[m - k] = c;
    }
    fft_pow2(u, false);
    fft_pow2(v, false);
    for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
    fft_pow2(u, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * chirp(k, n, pos);
}

}  // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void transform(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (is_pow2(n)) {
        fft_pow2(a, inverse);
    } else {
        fft_bluestein(a, inverse);
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= scale;
    }
}

}  // namespace hlab::fft
