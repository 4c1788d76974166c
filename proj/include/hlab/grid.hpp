#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlab/common.hpp"
#include "hlab/parallel.hpp"

namespace hlab {

inline constexpr std::uint64_t kDefaultGridBudget = std::uint64_t(1) << 26;

// Uniform grid over an axis-aligned box in R^n, nodes x_i = origin + i*h.
struct BoxGrid {
    int n = 1;
    std::vector<double> origin;
    std::vector<double> h;
    std::vector<std::int64_t> N;

    BoxGrid() = default;
    BoxGrid(std::vector<double> origin, std::vector<double> h, std::vector<std::int64_t> N,
            std::uint64_t budget = kDefaultGridBudget);

    // 1-D grid covering [lo, hi] with spacing h (node count from the span).
    static BoxGrid line(double lo, double hi, double h, std::uint64_t budget = kDefaultGridBudget);

    std::uint64_t point_count() const;
    double cell_volume() const;
    double coord(int axis, std::int64_t i) const { return origin[axis] + double(i) * h[axis]; }
    double upper(int axis) const { return coord(axis, N[axis] - 1); }
    // Row-major decode: axis 0 is the slowest index.
    void unravel(std::uint64_t flat, std::span<std::int64_t> idx) const;
    bool same_layout(const BoxGrid& o) const;
};

// Values on a BoxGrid, row-major; imaginary part present only when complex.
struct SampledFunction {
    BoxGrid grid;
    std::vector<double> re;
    std::vector<double> im;

    bool is_complex() const { return !im.empty(); }
    std::complex<double> value(std::uint64_t i) const {
        return {re[i], im.empty() ? 0.0 : im[i]};
    }

    static SampledFunction real_valued(BoxGrid g, std::vector<double> values);
    static SampledFunction complex_valued(BoxGrid g, std::vector<double> re,
                                          std::vector<double> im);
};

// Integration domain: either a list of closed boxes or an explicit {0,1}
// indicator bound to a grid. Set operations are pointwise min/max.
struct RegionBox {
    std::vector<double> lo;
    std::vector<double> hi;
};

class Region {
  public:
    static Region boxes(std::vector<RegionBox> boxes);
    static Region indicator(BoxGrid grid, std::vector<std::uint8_t> values);

    // Indicator sampled on the target grid; for the indicator form the grid
    // layouts must match exactly.
    std::vector<std::uint8_t> mask_on(const BoxGrid& grid) const;
    Region unite(const Region& o, const BoxGrid& grid) const;
    Region intersect(const Region& o, const BoxGrid& grid) const;

  private:
    std::vector<RegionBox> boxes_;
    std::optional<BoxGrid> grid_;
    std::vector<std::uint8_t> values_;
};

// Closed-form function descriptor; the carrier for exact evaluation inside
// quadrature. Families: gaussian, bump, indicator, poly, tabulated.
struct AnalyticFunction {
    std::string descriptor;
    int n = 1;
    bool exact = true;  // false for tabulated data (interpolated)
    std::function<double(std::span<const double>)> eval;
    std::vector<Interval> support;  // per-axis bounding box of the support

    double operator()(double x) const {
        return eval(std::span<const double>(&x, 1));
    }
};

// Parse a descriptor string:
//   gaussian | gaussian:c | gaussian:c,w   e^{-pi ((x-c)/w)^2},  radial for n>1
//   bump | bump:c                          plateau bump g(x-c)
//   indicator:a,b                          chi_[a,b] (n=1)
//   poly:a,b:c0,c1,...                     polynomial on [a,b], 0 outside (n=1)
//   tabulated:path                         sampled CSV, cubic interpolation (n=1)
AnalyticFunction parse_function(const std::string& descriptor, int n = 1);

SampledFunction sample(const AnalyticFunction& f, const BoxGrid& grid);

// (h^n sum |f|^p)^{1/p} over the region (whole grid if absent); max |f| for
// p = infinity. Empty regions are an error.
double lp_quasi_norm(const SampledFunction& f, double p,
                     const std::optional<Region>& region = std::nullopt,
                     ExecMode mode = ExecMode::Parallel);

// h^n sum |f|^p over the region; the ^p-power values the growth reports use.
double lp_power_sum(const SampledFunction& f, double p,
                    const std::optional<Region>& region = std::nullopt,
                    ExecMode mode = ExecMode::Parallel);

// Linear convolution scaled by h^n, FFT with pow2 zero padding; output grid
// origin is the sum of origins, extent the combined support.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& k,
                         ExecMode mode = ExecMode::Parallel);

struct FourierDiagnostics {
    double boundary_ratio = 0.0;  // max |f| on the boundary / max |f|
    bool decay_warning = false;
};

// Approximates the continuous transform with kernel e^{-2 pi i x.xi}; the
// Gaussian e^{-pi |x|^2} is a fixed point. The output lives on the dual grid
// (spacing 1/(N h)); `target_origin` selects the spatial origin when
// inverting (defaults to the centered grid).
SampledFunction fourier_transform(const SampledFunction& f, bool inverse = false,
                                  std::optional<std::vector<double>> target_origin = std::nullopt,
                                  FourierDiagnostics* diag = nullptr);

// a*f + b*g on a shared grid.
SampledFunction linear_combine(double a, const SampledFunction& f, double b,
                               const SampledFunction& g);

// CSV layout: "# n=<n> h=<h,...> origin=<o,...> N=<N,...>", one value per
// line in row-major order ("re,im" per line when complex).
void write_csv(const SampledFunction& f, std::ostream& out);
SampledFunction read_csv(std::istream& in, std::uint64_t budget = kDefaultGridBudget);

}  // namespace hlab
