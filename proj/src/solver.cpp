#include "sgap/solver.hpp"

#include "sgap/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sgap {

namespace {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

Enclosure widen(double sum, double tail) {
    return {sum * (1.0 - series_relative_slack), sum * (1.0 + series_relative_slack) + tail};
}

// Where the root lies relative to a probe point.
enum class Side { RootAbove, RootBelow, Unknown };

constexpr int max_eps_refinements = 4;
constexpr double eps_refinement = 1e-3;

// Bisection that only moves an endpoint on a certified answer. `classify`
// receives the probe and a series eps; on a persistent Unknown the
// straddling region is squeezed from both sides and the search stops.
template <class Classify>
RootResult certified_bisection(double lo, double hi, const SolverSettings& settings,
                               Classify&& classify) {
    RootResult result;
    auto probe = [&](double x) {
        double eps = settings.series_eps;
        for (int level = 0; level <= max_eps_refinements; ++level) {
            ++result.evaluations;
            const Side side = classify(x, eps);
            if (side != Side::Unknown) return side;
            eps *= eps_refinement;
        }
        return Side::Unknown;
    };

    while (hi - lo > settings.tolerance) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const Side side = probe(mid);
        if (side == Side::RootAbove) {
            lo = mid;
        } else if (side == Side::RootBelow) {
            hi = mid;
        } else {
            // Floating-point plateau around the root: tighten each edge
            // toward the undecidable region, then report what is certified.
            double a = lo, b = mid;
            for (int i = 0; i < 200; ++i) {
                const double q = a + 0.5 * (b - a);
                if (q <= a || q >= b) break;
                (probe(q) == Side::RootAbove ? a : b) = q;
            }
            lo = a;
            a = mid;
            b = hi;
            for (int i = 0; i < 200; ++i) {
                const double q = a + 0.5 * (b - a);
                if (q <= a || q >= b) break;
                (probe(q) == Side::RootBelow ? b : a) = q;
            }
            hi = b;
            break;
        }
    }
    result.root = {lo, hi};
    result.widened = hi - lo > settings.tolerance;
    return result;
}

void check_settings(const SolverSettings& settings) {
    if (!(settings.tolerance > 0.0)) throw DomainError("solver tolerance must be positive");
    if (!(settings.series_eps > 0.0)) throw DomainError("series eps must be positive");
    if (!(settings.t_max > 0.0)) throw DomainError("t_max must be positive");
}

}  // namespace

Enclosure series_value(double t, double c0, double c1, const GapSet& set, double eps,
                       std::uint64_t max_terms) {
    if (!(c0 > 0.0 && c0 < 1.0) || !(c1 > 0.0 && c1 < 1.0)) {
        throw DomainError("contraction ratios must lie in (0, 1)");
    }
    if (!(eps > 0.0)) throw DomainError("series eps must be positive");
    const double log_c0 = std::log(c0);
    const double one_weight = std::pow(c1, t);

    if (!set.is_infinite()) {
        CompensatedSum sum;
        const auto& values = set.values();
        for (auto it = values.rbegin(); it != values.rend(); ++it) {
            sum.add(one_weight * std::exp(static_cast<double>(*it) * t * log_c0));
        }
        return widen(sum.value(), 0.0);
    }

    if (!(t > 0.0)) {
        throw DomainError("gap series diverges for t <= 0 on an infinite gap set");
    }
    const double log_q = t * log_c0;      // ln c0^t < 0
    const double one_minus_q = -std::expm1(log_q);
    auto tail_after = [&](double s_cut) {
        return one_weight * std::exp((s_cut + 1.0) * log_q) / one_minus_q;
    };
    // Smallest s_cut with tail_after(s_cut) ≤ eps.
    double guess = std::ceil(std::log(eps * one_minus_q / one_weight) / log_q) - 1.0;
    if (!(guess >= 0.0)) guess = 0.0;
    if (guess > static_cast<double>(max_terms)) {
        throw NumericError("gap series tail needs more than " + std::to_string(max_terms) +
                           " terms at t = " + std::to_string(t));
    }
    auto s_cut = static_cast<Gap>(guess);
    while (tail_after(static_cast<double>(s_cut)) > eps) {
        if (++s_cut > max_terms) {
            throw NumericError("gap series tail failed to shrink below eps");
        }
    }
    const double tail = tail_after(static_cast<double>(s_cut));

    // Ascending s means descending terms; compensation keeps the error
    // independent of the term count.
    CompensatedSum sum;
    for_each_gap(set, s_cut, [&](Gap s) {
        sum.add(one_weight * std::exp(static_cast<double>(s) * log_q));
    });
    return widen(sum.value(), tail);
}

RootResult solve_dimension_root(double c0, double c1, const GapSet& set,
                                const SolverSettings& settings) {
    check_settings(settings);
    if (!(c0 > 0.0 && c0 < 1.0) || !(c1 > 0.0 && c1 < 1.0)) {
        throw DomainError("contraction ratios must lie in (0, 1)");
    }
    if (!set.is_infinite() && set.size() == 1) {
        return RootResult{Enclosure::point(0.0), false, 0};
    }
    int bracket_evaluations = 0;
    auto value = [&](double t, double eps) {
        ++bracket_evaluations;
        return series_value(t, c0, c1, set, eps, settings.max_terms);
    };

    double hi = 1.0;
    while (value(hi, settings.series_eps).hi > 1.0) {
        hi *= 2.0;
        if (hi > settings.t_max) {
            throw NumericError("no upper bracket for the dimension root below t_max = " +
                               std::to_string(settings.t_max));
        }
    }
    double lo = 0.5 * hi;
    try {
        int halvings = 0;
        while (value(lo, settings.series_eps).lo < 1.0) {
            lo *= 0.5;
            if (++halvings > 60) {
                if (!set.is_infinite()) {
                    lo = 0.0;  // F(0) = |S| ≥ 2
                    break;
                }
                throw NumericError("no lower bracket for the dimension root");
            }
        }
    } catch (const NumericError& e) {
        throw NumericError(std::string("dimension root bracket not established: ") + e.what());
    }

    RootResult result = certified_bisection(lo, hi, settings, [&](double t, double eps) {
        const Enclosure f = series_value(t, c0, c1, set, eps, settings.max_terms);
        if (f.lo >= 1.0) return Side::RootAbove;
        if (f.hi <= 1.0) return Side::RootBelow;
        return Side::Unknown;
    });
    result.evaluations += bracket_evaluations;
    return result;
}

DimensionBounds bounds(const ContractionPair& pair, const GapSet& set,
                       const SolverSettings& settings) {
    pair.validate();
    const RootResult lower = solve_dimension_root(pair.c0_lower, pair.c1_lower, set, settings);
    const RootResult upper = solve_dimension_root(pair.c0_upper, pair.c1_upper, set, settings);
    DimensionBounds out{lower.root, upper.root, lower.widened || upper.widened};
    if (out.h.mid() > out.H.mid() + settings.tolerance) {
        throw NumericError("solved h exceeds H; contraction constants are inconsistent");
    }
    return out;
}

double EntropyResult::entropy_bits() const {
    return entropy / std::numbers::ln2;
}

EntropyResult solve_entropy(const GapSet& set, const SolverSettings& settings) {
    check_settings(settings);
    if (!set.is_infinite() && set.size() < 2) {
        return EntropyResult{Enclosure::point(1.0), 0.0, false};
    }
    // G(λ) = Σ λ^{s+1} is the gap series at t = 1 with c0 = c1 = λ.
    auto value = [&](double lambda, double eps) {
        return series_value(1.0, lambda, lambda, set, eps, settings.max_terms);
    };
    double lo = 0.5;
    while (value(lo, settings.series_eps).hi > 1.0) {
        lo *= 0.5;
        if (lo < 1e-300) throw NumericError("no lower bracket for the entropy root");
    }
    double hi = 0.75;
    try {
        for (double gap = 0.25; value(hi, settings.series_eps).lo < 1.0;) {
            gap *= 0.5;
            if (gap < 1e-15) throw NumericError("λ approached 1 without G(λ) reaching 1");
            hi = 1.0 - gap;
        }
    } catch (const NumericError& e) {
        throw NumericError(std::string("entropy bracket not established: ") + e.what());
    }
    if (lo >= hi) lo = 0.5 * hi;

    const RootResult root = certified_bisection(lo, hi, settings, [&](double lambda, double eps) {
        const Enclosure g = value(lambda, eps);
        if (g.hi <= 1.0) return Side::RootAbove;
        if (g.lo >= 1.0) return Side::RootBelow;
        return Side::Unknown;
    });
    return EntropyResult{root.root, -std::log(root.root.mid()), root.widened};
}

double golden_mean_spectral_radius(double t, double c0, double c1) {
    if (!(c0 > 0.0 && c0 < 1.0) || !(c1 > 0.0 && c1 < 1.0)) {
        throw DomainError("contraction ratios must lie in (0, 1)");
    }
    const double a = std::pow(c0, t);
    const double b = std::pow(c1, t);
    return 0.5 * (a + std::sqrt(a * a + 4.0 * a * b));
}

GoldenMeanReport cross_check_golden_mean(double c0, double c1, double tol) {
    GoldenMeanReport report;
    report.tolerance = tol;

    // ρ(0) = φ > 1 and ρ decreases to 0.
    double lo = 0.0, hi = 1.0;
    while (golden_mean_spectral_radius(hi, c0, c1) > 1.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw NumericError("spectral radius stays above 1");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        (golden_mean_spectral_radius(mid, c0, c1) > 1.0 ? lo : hi) = mid;
    }
    report.h_spectral = 0.5 * (lo + hi);

    SolverSettings settings;
    settings.tolerance = std::min(1e-10, 0.01 * tol);
    report.h_series =
        solve_dimension_root(c0, c1, GapSet::naturals_from(1), settings).root;
    const double h = report.h_series.mid();
    report.difference = std::abs(report.h_spectral - h);
    const double x = std::pow(c0, h);
    report.identity_residual = std::abs(x + x * std::pow(c1, h) - 1.0);
    report.pass = report.difference <= tol && report.identity_residual <= tol;
    return report;
}

}  // namespace sgap
