#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hlab/common.hpp"

namespace hlab {

struct QuadratureOptions {
    double rtol = 1e-7;
    double atol = 0.0;  // absolute floor; 0 derives one from the sampled scale
    int min_panels = 4;        // 16-point panels: >= 64 nodes per interval
    int max_refinements = 14;  // doubling steps before giving up
    // Panels are spaced geometrically on [a, b] once b/a exceeds this; keeps
    // slowly-decaying tails (r^-2, r^-3 over several decades) resolvable.
    double geometric_ratio = 64.0;
};

struct QuadratureResult {
    double value = 0.0;
    double last_change = 0.0;
    int refinements = 0;
    bool converged = false;
};

// Composite 16-point Gauss-Legendre over [a, b], split at the interior
// breakpoints, panel count doubled until the change criterion is met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints = {},
                           const QuadratureOptions& opt = {});

// As integrate() but throws NumericError on non-convergence.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          std::span<const double> breakpoints = {},
                          const QuadratureOptions& opt = {});

}  // namespace hlab
