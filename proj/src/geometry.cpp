#include "sgap/geometry.hpp"

#include "sgap/errors.hpp"
#include "sgap/language.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sgap {

Similarity Similarity::make(double ratio, double angle, Point translation) {
    return {std::polar(ratio, angle), translation};
}

Similarity Similarity::after(const Similarity& inner) const noexcept {
    return {multiplier * inner.multiplier, multiplier * inner.offset + offset};
}

Point Similarity::fixed_point() const {
    const Point denom = Point(1.0, 0.0) - multiplier;
    if (std::abs(denom) == 0.0) throw DomainError("identity-like map has no unique fixed point");
    return offset / denom;
}

void SimilarityIFS::validate() const {
    if (dimension != 1 && dimension != 2) {
        throw DomainError("IFS dimension must be 1 or 2, got " + std::to_string(dimension));
    }
    for (const Similarity* f : {&map0, &map1}) {
        const double r = f->ratio();
        if (!(r > 0.0 && r < 1.0)) {
            throw DomainError("similarity ratio must lie in (0, 1), got " + std::to_string(r));
        }
        if (dimension == 1 && (f->multiplier.imag() != 0.0 || f->multiplier.real() <= 0.0 ||
                               f->offset.imag() != 0.0)) {
            throw DomainError("one-dimensional maps must be x -> r*x + b with r > 0");
        }
    }
}

void SimilarityIFS::check_consistent(const ContractionPair& pair) const {
    const double r0 = map0.ratio();
    const double r1 = map1.ratio();
    // Ratios are typically typed as decimals; allow representation error.
    constexpr double slack = 1e-12;
    if (r0 < pair.c0_lower - slack || r0 > pair.c0_upper + slack) {
        throw DomainError("map0 ratio " + std::to_string(r0) + " lies outside [c0_lower, c0_upper]");
    }
    if (r1 < pair.c1_lower - slack || r1 > pair.c1_upper + slack) {
        throw DomainError("map1 ratio " + std::to_string(r1) + " lies outside [c1_lower, c1_upper]");
    }
}

HullBall invariant_ball(const SimilarityIFS& ifs) {
    const Point center = 0.5 * (ifs.map0.fixed_point() + ifs.map1.fixed_point());
    double radius = 0.0;
    for (const Similarity* f : {&ifs.map0, &ifs.map1}) {
        radius = std::max(radius, std::abs((*f)(center)-center) / (1.0 - f->ratio()));
    }
    return {center, radius};
}

Similarity compose_map(const SimilarityIFS& ifs, const Word& w) {
    Similarity acc = Similarity::identity();
    for (auto letter : w.letters()) {
        acc = acc.after(ifs.map(letter));
    }
    return acc;
}

Point tail_anchor(const SimilarityIFS& ifs, const GapSet& set) {
    const Gap m = gap_contains(set, 0) ? 0 : set.min();
    Word block;
    block.append_zeros(m);
    block.push_back(1);
    return compose_map(ifs, block).fixed_point();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

PointCloud generate_points(const SimilarityIFS& ifs, const GapSet& set, std::size_t depth,
                           std::size_t cap, std::uint64_t seed) {
    ifs.validate();
    if (depth == 0) throw DomainError("point generation needs depth >= 1");

    // Largest usable length; counts past the 128-bit range count as "over cap".
    std::size_t length = 0;
    bool over_cap = false;
    for (std::size_t n = depth; n >= 1; --n) {
        try {
            const Count c = count_core(n, set, depth);
            if (c > 0) {
                length = n;
                over_cap = c > Count(cap);
                break;
            }
        } catch (const NumericError&) {
            length = n;
            over_cap = true;
            break;
        }
    }
    if (length == 0) {
        throw DomainError("no core words of length <= " + std::to_string(depth) +
                          " for S = " + set.describe());
    }

    const Point anchor = tail_anchor(ifs, set);
    PointCloud cloud;
    cloud.dimension = ifs.dimension;
    if (!over_cap) {
        cloud.word_length = length;
        for (const Word& w : enumerate_core(length, set)) {
            cloud.points.push_back(compose_map(ifs, w)(anchor));
        }
        return cloud;
    }

    cloud.word_length = depth;
    cloud.exhaustive = false;
    cloud.points.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) {
        Word w = sample_word(depth, set, splitmix64(seed + i));
        std::size_t last_one = w.length();
        while (last_one > 0 && w[last_one - 1] == 0) --last_one;
        if (last_one == 0) continue;
        cloud.points.push_back(compose_map(ifs, w.prefix(last_one))(anchor));
    }
    return cloud;
}

}  // namespace sgap
