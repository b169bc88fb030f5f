#pragma once

#include "sgap/enclosure.hpp"
#include "sgap/gap_set.hpp"
#include "sgap/pressure.hpp"

#include <cstdint>

namespace sgap {

/// Relative widening applied to every summed series endpoint.
inline constexpr double series_relative_slack = 1e-12;

struct SolverSettings {
    double tolerance = 1e-9;
    double series_eps = 1e-12;
    double t_max = 1024.0;
    std::uint64_t max_terms = 10'000'000;
};

/// Enclosure of the gap series F(t) = Σ_{s ∈ S} c0^{st} c1^t.
///
/// Finite S is summed exactly. Infinite S is summed up to a cut s_cut and the
/// rest is bounded by the geometric majorant c1^t c0^{(s_cut+1)t}/(1 - c0^t),
/// with s_cut chosen so that majorant ≤ eps.
Enclosure series_value(double t, double c0, double c1, const GapSet& set, double eps,
                       std::uint64_t max_terms = SolverSettings{}.max_terms);

struct RootResult {
    Enclosure root;
    /// Set when floating-point slack kept the enclosure wider than requested.
    bool widened = false;
    int evaluations = 0;
};

/// Enclosure of the unique t ≥ 0 with F(t) = 1.
///
/// F is strictly decreasing; bisection only moves an endpoint on a certified
/// comparison against 1. A singleton S has F(t) < 1 for all t > 0 and yields
/// the degenerate root [0, 0].
RootResult solve_dimension_root(double c0, double c1, const GapSet& set,
                                const SolverSettings& settings = {});

struct DimensionBounds {
    Enclosure h;  // lower constants
    Enclosure H;  // upper constants
    bool widened = false;
};

DimensionBounds bounds(const ContractionPair& pair, const GapSet& set,
                       const SolverSettings& settings = {});

struct EntropyResult {
    Enclosure lambda;
    /// ln(1/λ) in nats.
    double entropy = 0.0;
    bool widened = false;

    double entropy_bits() const;
};

/// Solves Σ_{s ∈ S} λ^{s+1} = 1 for λ ∈ (0, 1). Sets with fewer than two
/// elements have zero entropy and report λ = [1, 1].
EntropyResult solve_entropy(const GapSet& set, const SolverSettings& settings = {});

/// Perron root of [[c0^t, c1^t], [c0^t, 0]].
double golden_mean_spectral_radius(double t, double c0, double c1);

struct GoldenMeanReport {
    double h_spectral = 0.0;
    Enclosure h_series;
    double difference = 0.0;
    /// |c0^h + c0^h c1^h - 1| at the series midpoint.
    double identity_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares the spectral-radius root with the gap-series root for S = ℕ.
GoldenMeanReport cross_check_golden_mean(double c0, double c1, double tol);

}  // namespace sgap
