#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hlab {

// Error taxonomy. The CLI maps these onto its exit-code contract:
// validation -> 2, numerical non-convergence -> 3, budget/feasibility -> 4.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed interval [lo, hi]; empty when lo > hi.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    static Interval all() { return {-kInf, kInf}; }
    static Interval empty_interval() { return {1.0, 0.0}; }

    bool empty() const { return !(lo <= hi); }
    double length() const { return empty() ? 0.0 : hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
    bool bounded() const { return !empty() && std::isfinite(lo) && std::isfinite(hi); }
    Interval intersect(const Interval& o) const {
        return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
    }
};

// Radial clamp for profiles whose analytic support is unbounded but whose
// tail is integrable; all experiment supports fall well inside.
inline constexpr double kRadialClampLo = 9.5367431640625e-07;  // 2^-20
inline constexpr double kRadialClampHi = 1048576.0;            // 2^20

// %.17g rendering, used by every CSV writer so outputs are byte-stable.
std::string format_double(double v);

// FNV-1a 64-bit, hex-encoded; provenance hash for CLI output headers.
std::string fnv1a_hex(const std::string& data);

}  // namespace hlab
