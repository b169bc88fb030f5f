#include "sgap/box_dimension.hpp"

#include "sgap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sgap {

std::vector<double> scale_ladder(double base, int j_min, int j_max) {
    if (!(base > 1.0) || j_min > j_max || j_min < 0) {
        throw DomainError("scale ladder needs base > 1 and 0 <= j_min <= j_max");
    }
    std::vector<double> scales;
    for (int j = j_min; j <= j_max; ++j) scales.push_back(std::pow(base, -j));
    return scales;
}

BoxCountSeries box_counts(const PointCloud& cloud, const std::vector<double>& scales) {
    if (cloud.points.empty()) throw DomainError("box counting needs a non-empty cloud");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0 && scales[i] <= 1.0)) {
            throw DomainError("box scales must lie in (0, 1]");
        }
        if (i > 0 && !(scales[i] < scales[i - 1])) {
            throw DomainError("box scales must be strictly decreasing");
        }
    }
    BoxCountSeries series;
    std::vector<std::pair<std::int64_t, std::int64_t>> cells(cloud.points.size());
    for (double r : scales) {
        std::transform(cloud.points.begin(), cloud.points.end(), cells.begin(), [r](Point p) {
            return std::pair{static_cast<std::int64_t>(std::floor(p.real() / r)),
                             static_cast<std::int64_t>(std::floor(p.imag() / r))};
        });
        std::sort(cells.begin(), cells.end());
        const auto distinct = std::unique(cells.begin(), cells.end()) - cells.begin();
        series.entries.push_back({r, static_cast<std::uint64_t>(distinct)});
    }
    return series;
}

BoxDimensionEstimate estimate_box_dimension(const BoxCountSeries& series, std::size_t drop_low,
                                            std::size_t drop_high) {
    if (series.size() < drop_low + drop_high + 2) {
        throw DomainError("box-count series too short for the requested drops");
    }
    const std::size_t first = drop_high;
    const std::size_t last = series.size() - drop_low;  // exclusive
    const auto m = static_cast<double>(last - first);

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        mean_x += -std::log(series.entries[i].scale);
        mean_y += std::log(static_cast<double>(series.entries[i].occupied));
    }
    mean_x /= m;
    mean_y /= m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const double dx = -std::log(series.entries[i].scale) - mean_x;
        const double dy = std::log(static_cast<double>(series.entries[i].occupied)) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx <= 0.0) throw DomainError("box-count scales are not distinct");

    BoxDimensionEstimate est;
    est.slope = sxy / sxx;
    est.points_used = last - first;
    if (last - first > 2) {
        double sse = 0.0;
        for (std::size_t i = first; i < last; ++i) {
            const double dx = -std::log(series.entries[i].scale) - mean_x;
            const double dy = std::log(static_cast<double>(series.entries[i].occupied)) - mean_y;
            const double resid = dy - est.slope * dx;
            sse += resid * resid;
        }
        est.standard_error = std::sqrt(sse / (m - 2.0) / sxx);
    }
    return est;
}

BoundsCheck verify_bounds(double estimate, double standard_error, const DimensionBounds& b,
                          double slack) {
    BoundsCheck check;
    check.estimate = estimate;
    check.standard_error = standard_error;
    check.lower = b.h.lo - slack;
    check.upper = b.H.hi + slack;
    check.pass = check.lower <= estimate && estimate <= check.upper;
    return check;
}

}  // namespace sgap
