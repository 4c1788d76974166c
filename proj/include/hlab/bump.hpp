#pragma once

#include <cmath>

namespace hlab {

// C-infinity transition T: 0 for t <= 0, 1 for t >= 1, strictly increasing
// in between, with T(t) + T(1-t) = 1.
inline double smooth_transition(double t) {
    if (t >= 1.0) return 1.0;
    if (t <= 0.0) return 0.0;
    const double s = std::exp(-1.0 / t);
    const double s1 = std::exp(-1.0 / (1.0 - t));
    return s / (s + s1);
}

// Radial plateau bump: 1 on |x| <= 1, 0 for |x| >= 2, smooth in between.
// The value is exactly 1.0 on the plateau, which root-finding relies on.
inline double bump_radial(double r) { return smooth_transition(2.0 - std::abs(r)); }

}  // namespace hlab
