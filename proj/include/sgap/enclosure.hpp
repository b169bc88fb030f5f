#pragma once

#include <algorithm>

namespace sgap {

/// Closed interval [lo, hi] certified (up to floating-point slack) to
/// contain a true value.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const noexcept { return 0.5 * (lo + hi); }
    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    bool overlaps(const Enclosure& other, double slack = 0.0) const noexcept {
        return lo <= other.hi + slack && other.lo <= hi + slack;
    }

    static Enclosure point(double x) noexcept { return {x, x}; }
};

}  // namespace sgap
