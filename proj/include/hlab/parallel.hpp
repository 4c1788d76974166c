#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hlab {

// Every heavy kernel takes an ExecMode. Serial is the reference path kept for
// testing; Parallel is the OpenMP path. Results are required to agree
// bit-for-bit because reductions use a fixed chunk structure in both modes.
enum class ExecMode { Parallel, Serial };

// Thread count for OpenMP regions. n <= 0 restores the runtime default.
void set_threads(int n);
int thread_count();

namespace detail {
void parallel_for_impl(std::size_t n, ExecMode mode, void* ctx, void (*body)(void*, std::size_t));
}

template <typename F>
void parallel_for(std::size_t n, ExecMode mode, F&& body) {
    detail::parallel_for_impl(n, mode, &body, [](void* ctx, std::size_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

// Deterministic sum: fixed-size chunks accumulated independently (chunk loop
// parallel in Parallel mode), partials combined serially in index order.
// Identical result for any thread count and for both exec modes.
double chunked_sum(std::span<const double> v, ExecMode mode = ExecMode::Parallel);

// Deterministic max of |v[i]|; 0 for empty input.
double chunked_max_abs(std::span<const double> v, ExecMode mode = ExecMode::Parallel);

}  // namespace hlab
