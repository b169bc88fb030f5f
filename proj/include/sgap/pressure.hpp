#pragma once

#include "sgap/gap_set.hpp"
#include "sgap/word.hpp"

#include <optional>
#include <vector>

namespace sgap {

/// Two-sided Lipschitz bounds cᵢ·d(x,y) ≤ d(fᵢx, fᵢy) ≤ c̄ᵢ·d(x,y).
struct ContractionPair {
    double c0_lower = 0.5;
    double c0_upper = 0.5;
    double c1_lower = 0.5;
    double c1_upper = 0.5;

    /// Throws DomainError unless 0 < cᵢ ≤ c̄ᵢ < 1 for both maps.
    void validate() const;
    static ContractionPair uniform(double c0, double c1) { return {c0, c0, c1, c1}; }
};

enum class SumKind { Language, Core };

struct PressureSample {
    std::size_t n = 0;
    double t = 0.0;
    double weighted_sum = 0.0;
    /// (1/n)·ln(weighted_sum); empty when the sum vanishes.
    std::optional<double> pressure;

    bool defined() const noexcept { return pressure.has_value(); }
};

/// Σ_{ω ∈ Lₙ} (c0^{#0(ω)} c1^{#1(ω)})^t.
double weighted_language_sum(std::size_t n, double t, double c0, double c1, const GapSet& set);

/// Σ_{ω ∈ Gₙ} c_ω^t through the renewal recurrence
/// g(n) = Σ_{s ∈ S, s+1 ≤ n} c0^{st} c1^t g(n-s-1), g(0) = 1.
double weighted_core_sum(std::size_t n, double t, double c0, double c1, const GapSet& set);

/// g(0..n_max) in one pass.
std::vector<double> weighted_core_sums(std::size_t n_max, double t, double c0, double c1,
                                       const GapSet& set);

/// Finite-n pressure (1/n)·ln Σ, natural log. Requires n ≥ 1.
PressureSample pressure_estimate(std::size_t n, double t, double c0, double c1,
                                 const GapSet& set, SumKind which);

/// Running maximum of the core pressure over 1 ≤ n ≤ n_max, the finite proxy
/// for its limsup. Empty when every core sum up to n_max vanishes.
std::optional<double> core_pressure_limsup(std::size_t n_max, double t, double c0, double c1,
                                           const GapSet& set);

/// νₙ([[ω]]): weighted mass of allowable length-(n+ℓ(ω)) words extending ω,
/// relative to all allowable words of that length. ω must be allowable.
double cylinder_measure_estimate(const Word& w, std::size_t n, double t, double c0, double c1,
                                 const GapSet& set);

}  // namespace sgap
