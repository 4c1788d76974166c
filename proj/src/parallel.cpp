#include "hlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlab {

namespace {
int g_threads = 0;
constexpr std::size_t kChunk = 4096;
}  // namespace

void set_threads(int n) {
    g_threads = n;
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

int thread_count() {
#ifdef _OPENMP
    if (g_threads > 0) return g_threads;
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::size_t n, ExecMode mode, void* ctx, void (*body)(void*, std::size_t)) {
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(ctx, i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(ctx, static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail

double chunked_sum(std::span<const double> v, ExecMode mode) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_for(chunks, mode, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        partial[c] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

double chunked_max_abs(std::span<const double> v, ExecMode mode) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_for(chunks, mode, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(v[i]));
        partial[c] = m;
    });
    double total = 0.0;
    for (double m : partial) total = std::max(total, m);
    return total;
}

}  // namespace hlab
