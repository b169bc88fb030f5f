#include "sgap/pressure.hpp"

#include "sgap/errors.hpp"
#include "sgap/language.hpp"

#include <algorithm>
#include <cmath>

namespace sgap {

namespace {

void check_ratio(double c, const char* name) {
    if (!(c > 0.0 && c < 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(c));
    }
}

void check_ratios(double c0, double c1) {
    check_ratio(c0, "c0");
    check_ratio(c1, "c1");
}

}  // namespace

void ContractionPair::validate() const {
    check_ratio(c0_lower, "c0_lower");
    check_ratio(c0_upper, "c0_upper");
    check_ratio(c1_lower, "c1_lower");
    check_ratio(c1_upper, "c1_upper");
    if (c0_lower > c0_upper) throw DomainError("c0_lower exceeds c0_upper");
    if (c1_lower > c1_upper) throw DomainError("c1_lower exceeds c1_upper");
}

double weighted_language_sum(std::size_t n, double t, double c0, double c1, const GapSet& set) {
    check_ratios(c0, c1);
    const LanguageAutomaton automaton(set, n);
    return continuation_sum<double>(automaton, automaton.start(), n, std::pow(c0, t),
                                    std::pow(c1, t));
}

std::vector<double> weighted_core_sums(std::size_t n_max, double t, double c0, double c1,
                                       const GapSet& set) {
    check_ratios(c0, c1);
    const std::vector<Gap> gaps = gap_enumerate(set, n_max == 0 ? 0 : n_max - 1);
    const double one_weight = std::pow(c1, t);
    std::vector<double> block_weight(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        block_weight[i] = std::pow(c0, static_cast<double>(gaps[i]) * t) * one_weight;
    }
    std::vector<double> g(n_max + 1, 0.0);
    g[0] = 1.0;
    for (std::size_t m = 1; m <= n_max; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < gaps.size() && gaps[i] + 1 <= m; ++i) {
            acc += block_weight[i] * g[m - gaps[i] - 1];
        }
        g[m] = acc;
    }
    return g;
}

double weighted_core_sum(std::size_t n, double t, double c0, double c1, const GapSet& set) {
    return weighted_core_sums(n, t, c0, c1, set)[n];
}

PressureSample pressure_estimate(std::size_t n, double t, double c0, double c1,
                                 const GapSet& set, SumKind which) {
    if (n == 0) throw DomainError("pressure estimate needs n >= 1");
    PressureSample sample;
    sample.n = n;
    sample.t = t;
    sample.weighted_sum = which == SumKind::Language ? weighted_language_sum(n, t, c0, c1, set)
                                                     : weighted_core_sum(n, t, c0, c1, set);
    if (sample.weighted_sum > 0.0) {
        sample.pressure = std::log(sample.weighted_sum) / static_cast<double>(n);
    }
    return sample;
}

std::optional<double> core_pressure_limsup(std::size_t n_max, double t, double c0, double c1,
                                           const GapSet& set) {
    const std::vector<double> g = weighted_core_sums(n_max, t, c0, c1, set);
    std::optional<double> best;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (g[n] <= 0.0) continue;
        const double p = std::log(g[n]) / static_cast<double>(n);
        if (!best || p > *best) best = p;
    }
    return best;
}

double cylinder_measure_estimate(const Word& w, std::size_t n, double t, double c0, double c1,
                                 const GapSet& set) {
    check_ratios(c0, c1);
    if (n == 0) throw DomainError("cylinder measure needs n >= 1");
    const LanguageAutomaton automaton(set, w.length() + n);
    const LanguageState after = automaton.read(w);
    if (after.dead) {
        throw DomainError("cylinder word '" + w.str() + "' is not allowable");
    }
    const double zero_weight = std::pow(c0, t);
    const double one_weight = std::pow(c1, t);
    const double prefix_weight = std::pow(zero_weight, static_cast<double>(w.zeros())) *
                                 std::pow(one_weight, static_cast<double>(w.ones()));
    const double numerator =
        prefix_weight * continuation_sum<double>(automaton, after, n, zero_weight, one_weight);
    const double denominator = continuation_sum<double>(automaton, automaton.start(),
                                                        w.length() + n, zero_weight, one_weight);
    return numerator / denominator;
}

}  // namespace sgap
