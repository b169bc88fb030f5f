#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sgap {

using Gap = std::uint64_t;

enum class GapKind { Finite, Arithmetic, Primes, NaturalsFrom, FileBacked };

/// The set S ⊆ ℕ₀ of admissible zero-run lengths between consecutive 1s.
///
/// Always non-empty. Enumeration is strictly increasing. Finite and
/// file-backed sets hold their values; the other kinds are described by a
/// rule and are infinite.
class GapSet {
public:
    static GapSet finite(std::vector<Gap> values);
    static GapSet arithmetic(Gap start, Gap step);
    static GapSet primes();
    static GapSet naturals_from(Gap offset);
    /// One non-negative decimal integer per line, strictly ascending.
    /// Blank lines and lines starting with '#' are skipped.
    static GapSet from_file(const std::filesystem::path& path);

    GapKind kind() const noexcept { return kind_; }
    bool is_infinite() const noexcept;

    /// Stored values for Finite/FileBacked kinds (ascending).
    const std::vector<Gap>& values() const noexcept { return values_; }
    Gap start() const noexcept { return start_; }
    Gap step() const noexcept { return step_; }
    Gap offset() const noexcept { return start_; }
    const std::filesystem::path& source() const noexcept { return source_; }

    Gap min() const;
    /// Largest element; only meaningful for finite sets.
    Gap max() const;
    /// Number of elements, or 0 for infinite sets.
    std::size_t size() const noexcept;

    std::string describe() const;

private:
    GapSet() = default;

    GapKind kind_ = GapKind::Finite;
    std::vector<Gap> values_;
    Gap start_ = 0;
    Gap step_ = 1;
    std::filesystem::path source_;
};

bool gap_contains(const GapSet& set, Gap s);

/// All s ∈ S with s ≤ s_max, ascending.
std::vector<Gap> gap_enumerate(const GapSet& set, Gap s_max);

/// Calls fn(s) for every s ∈ S with s ≤ s_max, ascending, without
/// materialising the list for rule-based kinds.
template <class Fn>
void for_each_gap(const GapSet& set, Gap s_max, Fn&& fn);

/// Membership table m[s] = (s ∈ S) for 0 ≤ s ≤ s_max.
std::vector<bool> gap_membership(const GapSet& set, Gap s_max);

bool is_prime(Gap n) noexcept;

/// Sieve of Eratosthenes; returns all primes ≤ limit.
std::vector<Gap> primes_up_to(Gap limit);

template <class Fn>
void for_each_gap(const GapSet& set, Gap s_max, Fn&& fn) {
    switch (set.kind()) {
    case GapKind::Arithmetic:
        for (Gap s = set.start(); s <= s_max; s += set.step()) {
            fn(s);
            if (s_max - s < set.step()) break;
        }
        return;
    case GapKind::NaturalsFrom:
        for (Gap s = set.offset(); s <= s_max; ++s) {
            fn(s);
            if (s == s_max) break;
        }
        return;
    default:
        for (Gap s : gap_enumerate(set, s_max)) fn(s);
        return;
    }
}

}  // namespace sgap
