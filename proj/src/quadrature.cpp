#include "hlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hlab {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr std::array<double, 8> kGlNode = {
    0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
    0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
    0.9445750230732325761, 0.9894009349916499326,
};
constexpr std::array<double, 8> kGlWeight = {
    0.1894506104550684963, 0.1826034150449235889, 0.1691565193950025382,
    0.1495959888165767320, 0.1246289712555338720, 0.0951585116824927848,
    0.0622535239386478929, 0.0271524594117540949,
};

struct PanelSum {
    double value = 0.0;
    double max_abs = 0.0;  // max |f| seen, for the absolute floor
};

PanelSum gl16(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    PanelSum s;
    for (int i = 0; i < 8; ++i) {
        const double d = rad * kGlNode[i];
        const double f1 = f(mid - d);
        const double f2 = f(mid + d);
        s.value += kGlWeight[i] * (f1 + f2);
        s.max_abs = std::max({s.max_abs, std::abs(f1), std::abs(f2)});
    }
    s.value *= rad;
    return s;
}

// One composite pass over a segment with `panels` subpanels, linearly or
// geometrically spaced.
PanelSum composite(const std::function<double(double)>& f, double a, double b, int panels,
                   bool geometric) {
    PanelSum total;
    if (geometric) {
        const double ratio = std::pow(b / a, 1.0 / panels);
        double lo = a;
        for (int i = 0; i < panels; ++i) {
            const double hi = (i + 1 == panels) ? b : lo * ratio;
            const PanelSum s = gl16(f, lo, hi);
            total.value += s.value;
            total.max_abs = std::max(total.max_abs, s.max_abs);
            lo = hi;
        }
    } else {
        const double w = (b - a) / panels;
        for (int i = 0; i < panels; ++i) {
            const double lo = a + i * w;
            const double hi = (i + 1 == panels) ? b : a + (i + 1) * w;
            const PanelSum s = gl16(f, lo, hi);
            total.value += s.value;
            total.max_abs = std::max(total.max_abs, s.max_abs);
        }
    }
    return total;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, const QuadratureOptions& opt) {
    QuadratureResult res;
    if (!(b > a)) {
        res.converged = true;
        return res;
    }

    std::vector<double> edges;
    edges.push_back(a);
    std::vector<double> bp(breakpoints.begin(), breakpoints.end());
    std::sort(bp.begin(), bp.end());
    for (double x : bp)
        if (x > a && x < b && x > edges.back()) edges.push_back(x);
    edges.push_back(b);

    const int segs = static_cast<int>(edges.size()) - 1;
    int panels = std::max(1, (opt.min_panels + segs - 1) / segs);

    auto pass = [&](int per_seg) {
        PanelSum total;
        for (int s = 0; s < segs; ++s) {
            const double lo = edges[s];
            const double hi = edges[s + 1];
            const bool geo = lo > 0.0 && hi / lo > opt.geometric_ratio;
            const PanelSum ps = composite(f, lo, hi, per_seg, geo);
            total.value += ps.value;
            total.max_abs = std::max(total.max_abs, ps.max_abs);
        }
        return total;
    };

    PanelSum prev = pass(panels);
    for (int it = 0; it < opt.max_refinements; ++it) {
        panels *= 2;
        const PanelSum cur = pass(panels);
        const double change = std::abs(cur.value - prev.value);
        const double floor_abs =
            opt.atol > 0.0 ? opt.atol : 1e-13 * cur.max_abs * (b - a);
        res.value = cur.value;
        res.last_change = change;
        res.refinements = it + 1;
        if (change <= std::max(opt.rtol * std::abs(cur.value), floor_abs)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          std::span<const double> breakpoints, const QuadratureOptions& opt) {
    const QuadratureResult r = integrate(f, a, b, breakpoints, opt);
    if (!r.converged)
        throw NumericError("quadrature did not converge on [" + format_double(a) + ", " +
                           format_double(b) + "], last change " + format_double(r.last_change));
    return r.value;
}

}  // namespace hlab
