#pragma once

#include "sgap/geometry.hpp"
#include "sgap/solver.hpp"

#include <cstdint>
#include <vector>

namespace sgap {

struct BoxCount {
    double scale = 0.0;
    std::uint64_t occupied = 0;
};

/// Occupied-cell counts for strictly decreasing scales.
struct BoxCountSeries {
    std::vector<BoxCount> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

/// Scales base^{-j} for j = j_min..j_max.
std::vector<double> scale_ladder(double base = 2.0, int j_min = 2, int j_max = 12);

/// Number of grid cells [k·r, (k+1)·r)^d, anchored at the origin, holding at
/// least one point. Scales must be strictly decreasing within (0, 1].
BoxCountSeries box_counts(const PointCloud& cloud, const std::vector<double>& scales);

struct BoxDimensionEstimate {
    double slope = 0.0;
    double standard_error = 0.0;
    std::size_t points_used = 0;
};

/// Least-squares slope of ln N against ln(1/r), after dropping the
/// drop_high largest and drop_low smallest scales.
BoxDimensionEstimate estimate_box_dimension(const BoxCountSeries& series, std::size_t drop_low,
                                            std::size_t drop_high);

struct BoundsCheck {
    double estimate = 0.0;
    double standard_error = 0.0;
    double lower = 0.0;  // h.lo - slack
    double upper = 0.0;  // H.hi + slack
    bool pass = false;
};

BoundsCheck verify_bounds(double estimate, double standard_error, const DimensionBounds& b,
                          double slack);

}  // namespace sgap
