#pragma once

#include "sgap/gap_set.hpp"
#include "sgap/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace sgap {

/// Exact word counts; arithmetic overflow throws.
using Count = boost::multiprecision::checked_uint128_t;

inline constexpr std::size_t default_max_count_length = 64;

/// Membership DP state: whether a 1 has been read, and the current zero run.
struct LanguageState {
    bool seen_one = false;
    std::size_t run = 0;
    bool dead = false;

    friend bool operator==(const LanguageState&, const LanguageState&) = default;
};

/// Deterministic automaton recognising L(X(S)) on words of length ≤ horizon.
///
/// Every live state can be extended by at least one letter, so the language
/// is exactly the set of words that never reach the dead state.
class LanguageAutomaton {
public:
    LanguageAutomaton(const GapSet& set, std::size_t horizon);

    LanguageState start() const noexcept { return {}; }
    LanguageState step(LanguageState state, std::uint8_t letter) const;
    LanguageState read(const Word& w, LanguageState from = {}) const;

    /// Largest zero run a live state can carry within the horizon.
    std::size_t run_cap() const noexcept { return run_cap_; }
    std::size_t horizon() const noexcept { return horizon_; }
    bool gap_allowed(std::size_t run) const;

    std::size_t state_count() const noexcept { return 2 * (run_cap_ + 1); }
    std::size_t index(LanguageState s) const noexcept {
        return (s.seen_one ? run_cap_ + 1 : 0) + s.run;
    }

private:
    const GapSet* set_;
    std::size_t horizon_;
    std::size_t run_cap_;
    std::size_t run_bound_;  // max(S) for finite S, otherwise unbounded
    std::vector<bool> member_;
};

/// Σ over words τ of length `steps` with init·τ allowable of
/// zero_weight^{#0(τ)} · one_weight^{#1(τ)}.
///
/// T = Count with unit weights counts continuations; T = double gives the
/// weighted sums used for pressure.
template <class T>
T continuation_sum(const LanguageAutomaton& automaton, LanguageState init,
                   std::size_t steps, const T& zero_weight, const T& one_weight) {
    if (init.dead) return T(0);
    const std::size_t cap = automaton.run_cap();
    std::vector<T> cur(automaton.state_count(), T(0));
    std::vector<T> next(cur.size(), T(0));
    cur[automaton.index(init)] = T(1);
    for (std::size_t k = 0; k < steps; ++k) {
        std::fill(next.begin(), next.end(), T(0));
        for (int seen = 0; seen < 2; ++seen) {
            for (std::size_t run = 0; run <= cap; ++run) {
                const T& value = cur[(seen ? cap + 1 : 0) + run];
                if (value == T(0)) continue;
                const LanguageState state{seen == 1, run, false};
                const LanguageState on_zero = automaton.step(state, 0);
                if (!on_zero.dead) next[automaton.index(on_zero)] += value * zero_weight;
                const LanguageState on_one = automaton.step(state, 1);
                if (!on_one.dead) next[automaton.index(on_one)] += value * one_weight;
            }
        }
        std::swap(cur, next);
    }
    T total(0);
    for (const T& v : cur) total += v;
    return total;
}

/// |Lₙ(X(S))|.
Count count_language(std::size_t n, const GapSet& set,
                     std::size_t max_length = default_max_count_length);

/// |Gₙ| for the core set G = {0^{s₁}1 … 0^{s_k}1 : sᵢ ∈ S}, with |G₀| = 1.
Count count_core(std::size_t n, const GapSet& set,
                 std::size_t max_length = default_max_count_length);

/// Lazily walks Lₙ in lexicographic order.
class LanguageEnumerator {
public:
    LanguageEnumerator(std::size_t n, const GapSet& set, std::size_t cap);

    std::optional<Word> next();

private:
    bool fill_from(std::size_t pos);

    LanguageAutomaton automaton_;
    std::size_t n_;
    std::size_t remaining_;
    std::vector<std::uint8_t> letters_;
    std::vector<LanguageState> states_;  // states_[i] = state after i letters
    bool started_ = false;
    bool exhausted_ = false;
};

/// The first min(cap, |Lₙ|) allowable words of length n, lexicographically.
std::vector<Word> enumerate_language(std::size_t n, const GapSet& set, std::size_t cap);

/// Core words of length n, lexicographically, at most cap of them.
std::vector<Word> enumerate_core(std::size_t n, const GapSet& set,
                                 std::size_t cap = std::numeric_limits<std::size_t>::max());

/// Allowable word of length n assembled from blocks 0^s 1 with s drawn
/// uniformly among gaps that still fit; zero-padded when none fits.
/// Deterministic in seed.
Word sample_word(std::size_t n, const GapSet& set, std::uint64_t seed);

}  // namespace sgap
