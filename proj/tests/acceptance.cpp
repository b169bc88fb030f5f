// Acceptance battery: one line per criterion, exit status is the number of failures.

#include "oracles.hpp"

#include "sgap/box_dimension.hpp"
#include "sgap/geometry.hpp"
#include "sgap/language.hpp"
#include "sgap/pressure.hpp"
#include "sgap/solver.hpp"
#include "sgap/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace sgap;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit_s;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %-28s %s; %.3fs (limit %.0fs%s)\n", ok ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs, limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

const double golden_x = (std::sqrt(5.0) - 1.0) / 2.0;

// root of rho(t) = 1 where rho solves l^2 - a l - a b = 0, by plain bisection
double spectral_root(double c0, double c1) {
    auto rho = [&](double t) {
        const double a = std::pow(c0, t), b = std::pow(c1, t);
        return 0.5 * (a + std::sqrt(a * a + 4 * a * b));
    };
    double lo = 0.0, hi = 1.0;
    while (rho(hi) > 1.0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (rho(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SimilarityIFS cantor_maps() {
    SimilarityIFS ifs;
    ifs.map0 = Similarity::make(1.0 / 3, 0.0, {0.0, 0.0});
    ifs.map1 = Similarity::make(1.0 / 3, 0.0, {2.0 / 3, 0.0});
    ifs.osc_attested = true;
    return ifs;
}

struct BoxRun {
    double slope;
    double standard_error;
    std::size_t points;
    DimensionBounds b;
};

BoxRun box_run(const GapSet& set) {
    const auto cloud = generate_points(cantor_maps(), set, 14, 200000, 1);
    const auto series = box_counts(cloud, scale_ladder(2.0, 2, 12));
    const auto est = estimate_box_dimension(series, 2, 2);
    return {est.slope, est.standard_error, cloud.count(),
            bounds(ContractionPair::uniform(1.0 / 3, 1.0 / 3), set)};
}

}  // namespace

int main() {
    criterion(1, "golden-mean closed form", 1, [] {
        const double expected = std::log(1 / golden_x) / std::log(3.0);
        const auto r = solve_dimension_root(1.0 / 3, 1.0 / 3, GapSet::naturals_from(1), {.tolerance = 1e-9});
        const double err = std::abs(r.root.mid() - expected);
        return Outcome{err <= 1e-6 && r.root.width() <= 1e-9,
                       "h=" + fmt("%.12f", r.root.mid()) + " |err|=" + fmt("%.2e", err) +
                           " width=" + fmt("%.2e", r.root.width())};
    });

    criterion(2, "spectral cross-check", 1, [] {
        double worst = 0.0;
        for (auto [c0, c1] : {std::pair{1.0 / 3, 1.0 / 3}, {0.5, 0.25}, {0.9, 0.9}}) {
            const double series =
                solve_dimension_root(c0, c1, GapSet::naturals_from(1), {.tolerance = 1e-10}).root.mid();
            worst = std::max(worst, std::abs(series - spectral_root(c0, c1)));
            // library's own cross-check must agree as well
            if (!cross_check_golden_mean(c0, c1, 1e-8).pass) return Outcome{false, "library cross-check failed"};
        }
        return Outcome{worst <= 1e-8, "max |h_series-h_spectral|=" + fmt("%.2e", worst)};
    });

    criterion(3, "Moran reduction", 1, [] {
        const double expected = -std::log2(golden_x);
        const auto r = solve_dimension_root(0.5, 0.25, GapSet::naturals_from(0));
        const double err = std::abs(r.root.mid() - expected);
        const double vs_rounded = std::abs(r.root.mid() - 0.694242);
        return Outcome{err <= 1e-6 && vs_rounded <= 1e-6,
                       "h=" + fmt("%.12f", r.root.mid()) + " |err|=" + fmt("%.2e", err)};
    });

    criterion(4, "entropy consistency", 5, [] {
        double worst = 0.0;
        for (auto set : {GapSet::naturals_from(1), GapSet::naturals_from(0), GapSet::primes(),
                         GapSet::finite({1, 3})}) {
            const double h = solve_dimension_root(0.5, 0.5, set).root.mid();
            const double lambda = solve_entropy(set).lambda.mid();
            worst = std::max(worst, std::abs(h * std::log(2.0) - std::log(1 / lambda)));
        }
        return Outcome{worst <= 1e-8, "max |h ln2 - ln(1/lambda)|=" + fmt("%.2e", worst)};
    });

    criterion(5, "language oracle", 60, [] {
        const std::vector<std::pair<std::string, GapSet>> sets{
            {"N", GapSet::naturals_from(1)},   {"N0", GapSet::naturals_from(0)},
            {"primes", GapSet::primes()},      {"{0}", GapSet::finite({0})},
            {"{1}", GapSet::finite({1})},      {"{2,5}", GapSet::finite({2, 5})},
            {"1+3k", GapSet::arithmetic(1, 3)}};
        int compared = 0;
        for (const auto& [name, set] : sets) {
            for (std::size_t n = 0; n <= 16; ++n) {
                const Count got = count_language(n, set);
                const auto brute = brute_force_language_count(n, set);
                const auto defined = oracle::language_by_definition(n, set).size();
                if (got != Count(brute) || got != Count(defined)) {
                    std::ostringstream msg;
                    msg << name << " n=" << n << ": " << got << " vs " << brute << "/" << defined;
                    return Outcome{false, msg.str()};
                }
                ++compared;
            }
        }
        return Outcome{true, std::to_string(compared) + " (S, n) pairs agree"};
    });

    criterion(6, "corollary shadow", 10, [] {
        double min_sum = INFINITY, max_sum = 0.0;
        for (const auto& [name, set] : oracle::test_gap_sets()) {
            for (auto [c0, c1] : {std::pair{0.5, 0.25}, {1.0 / 3, 1.0 / 3}}) {
                const double h = solve_dimension_root(c0, c1, set, {.tolerance = 1e-12}).root.mid();
                for (std::size_t n = 1; n <= 30; ++n) {
                    const double w = weighted_language_sum(n, h, c0, c1, set);
                    min_sum = std::min(min_sum, w);
                    max_sum = std::max(max_sum, w);
                }
            }
        }
        return Outcome{min_sum >= 1 - 1e-9 && std::isfinite(max_sum),
                       "min W=" + fmt("%.12f", min_sum) + " max W=" + fmt("%.6f", max_sum)};
    });

    criterion(7, "core/language sandwich", 10, [] {
        double worst = -INFINITY;
        for (const auto& [name, set] : oracle::test_gap_sets()) {
            for (double t : {0.2, 0.5, 1.0}) {
                for (std::size_t n = 1; n <= 6; ++n) {
                    const double g = weighted_core_sum(n, t, 0.5, 0.25, set);
                    for (std::size_t k = 1; k <= 6; ++k) {
                        const double lhs = std::pow(g, static_cast<double>(k));
                        const double rhs = weighted_language_sum(n * k, t, 0.5, 0.25, set);
                        worst = std::max(worst, lhs / rhs - 1.0);
                    }
                }
            }
        }
        return Outcome{worst <= 1e-12, "max g^k/W - 1=" + fmt("%.3e", worst)};
    });

    criterion(8, "cylinder additivity", 30, [] {
        double worst = 0.0;
        int words = 0;
        std::mt19937_64 rng(8);
        for (const auto& [name, set] : oracle::test_gap_sets()) {
            const double h = solve_dimension_root(0.5, 0.25, set).root.mid();
            for (int i = 0; i < 100; ++i) {
                const Word w = sample_word(rng() % 9, set, rng());
                const std::size_t n = 1 + rng() % 12;
                double children = 0.0;
                for (const char* c : {"0", "1"}) {
                    const Word child = w + Word(c);
                    if (is_allowable(child, set)) children += cylinder_measure_estimate(child, n, h, 0.5, 0.25, set);
                }
                worst = std::max(worst, std::abs(children - cylinder_measure_estimate(w, n + 1, h, 0.5, 0.25, set)));
                ++words;
            }
        }
        return Outcome{worst <= 1e-12, std::to_string(words) + " words, max defect=" + fmt("%.2e", worst)};
    });

    criterion(9, "box dimension: Cantor", 60, [] {
        const auto r = box_run(GapSet::naturals_from(0));
        const double target = std::log(2.0) / std::log(3.0);
        return Outcome{std::abs(r.slope - target) <= 0.03,
                       "slope=" + fmt("%.4f", r.slope) + " target=" + fmt("%.6f", target) +
                           " points=" + std::to_string(r.points)};
    });

    criterion(9, "box dimension: golden mean", 60, [] {
        const auto r = box_run(GapSet::naturals_from(1));
        const bool near = std::abs(r.slope - 0.438018) <= 0.05;
        const bool inside = r.slope >= r.b.h.lo - 0.05 && r.slope <= r.b.H.hi + 0.05;
        return Outcome{near && inside, "slope=" + fmt("%.4f", r.slope) + " h=" + fmt("%.6f", r.b.h.mid()) +
                                           " points=" + std::to_string(r.points)};
    });

    criterion(9, "box dimension: prime gaps", 60, [] {
        const auto r = box_run(GapSet::primes());
        const bool inside = r.slope >= r.b.h.lo - 0.07 && r.slope <= r.b.H.hi + 0.07;
        return Outcome{inside, "slope=" + fmt("%.4f", r.slope) + " h=" + fmt("%.6f", r.b.h.mid()) +
                                   " points=" + std::to_string(r.points)};
    });

    criterion(10, "bound ordering", 30, [] {
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(0.02, 0.98);
        const std::vector<GapSet> sets{GapSet::naturals_from(1), GapSet::naturals_from(0), GapSet::primes(),
                                       GapSet::finite({1, 3}), GapSet::arithmetic(1, 3)};
        int trials = 0;
        for (int i = 0; i < 100; ++i) {
            const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
            const ContractionPair pair{std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
            for (const auto& set : sets) {
                const auto r = bounds(pair, set);
                if (!(r.h.mid() <= r.H.mid())) {
                    return Outcome{false, "violated for " + set.describe()};
                }
                ++trials;
            }
        }
        return Outcome{true, std::to_string(trials) + " (pair, S) trials ordered"};
    });

    std::printf("%d criterion check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
