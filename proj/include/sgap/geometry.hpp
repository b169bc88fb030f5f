#pragma once

#include "sgap/gap_set.hpp"
#include "sgap/pressure.hpp"
#include "sgap/word.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace sgap {

using Point = std::complex<double>;  // (x, y); y = 0 in dimension 1

/// z ↦ multiplier·z + offset, an orientation-preserving similarity of the
/// plane (or of the line when both parts are real).
struct Similarity {
    Point multiplier{1.0, 0.0};
    Point offset{0.0, 0.0};

    static Similarity make(double ratio, double angle, Point translation);
    static Similarity identity() { return {}; }

    double ratio() const noexcept { return std::abs(multiplier); }
    Point operator()(Point z) const noexcept { return multiplier * z + offset; }
    /// (*this ∘ inner)(z) = this(inner(z)).
    Similarity after(const Similarity& inner) const noexcept;
    Point fixed_point() const;
};

/// Two-map similarity IFS {f0, f1} in dimension 1 or 2.
struct SimilarityIFS {
    int dimension = 1;
    Similarity map0;
    Similarity map1;
    /// Declared by the user; the open set condition is not checked.
    bool osc_attested = false;

    const Similarity& map(std::uint8_t letter) const { return letter == 0 ? map0 : map1; }

    /// Throws DomainError on bad dimension, ratios outside (0,1), or
    /// non-real maps in dimension 1.
    void validate() const;
    /// Throws DomainError unless each ratio rᵢ ∈ [cᵢ, c̄ᵢ].
    void check_consistent(const ContractionPair& pair) const;
};

/// Closed ball B(center, radius) mapped into itself by both maps; it
/// contains the attractor.
struct HullBall {
    Point center;
    double radius = 0.0;
};

HullBall invariant_ball(const SimilarityIFS& ifs);

/// f_{ω₁} ∘ f_{ω₂} ∘ ⋯ ∘ f_{ωₙ}; cylinders f_{ω|n}(K) are nested in n.
Similarity compose_map(const SimilarityIFS& ifs, const Word& w);

struct PointCloud {
    int dimension = 1;
    std::vector<Point> points;
    /// Length of the generating words (exhaustive mode) or of the sampled
    /// words before truncation (sampling mode).
    std::size_t word_length = 0;
    /// True when every core word of that length was used.
    bool exhaustive = true;

    std::size_t count() const noexcept { return points.size(); }
};

/// Base point x₀ whose code is an allowable infinite tail after any core
/// word: the fixed point of f_{0^m 1} with m = 0 if 0 ∈ S, else m = min(S).
Point tail_anchor(const SimilarityIFS& ifs, const GapSet& set);

/// Points f_ω(x₀) for core words ω.
///
/// Picks the largest n ≤ depth with Gₙ non-empty. When |Gₙ| ≤ cap every core
/// word of length n is used; otherwise cap words are drawn with sample_word
/// and cut back to their last 1. Deterministic in seed.
PointCloud generate_points(const SimilarityIFS& ifs, const GapSet& set, std::size_t depth,
                           std::size_t cap, std::uint64_t seed);

}  // namespace sgap
