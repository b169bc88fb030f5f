#include "sgap/language.hpp"

#include "sgap/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sgap {

namespace {

void check_length(std::size_t n, std::size_t max_length) {
    if (n > max_length) {
        throw NumericError("word length " + std::to_string(n) +
                           " exceeds the configured counting maximum " +
                           std::to_string(max_length));
    }
}

}  // namespace

LanguageAutomaton::LanguageAutomaton(const GapSet& set, std::size_t horizon)
    : set_(&set), horizon_(horizon) {
    run_bound_ = set.is_infinite() ? std::numeric_limits<std::size_t>::max()
                                   : static_cast<std::size_t>(set.max());
    run_cap_ = std::min(run_bound_, horizon_);
    member_ = gap_membership(set, run_cap_);
}

bool LanguageAutomaton::gap_allowed(std::size_t run) const {
    return run < member_.size() ? static_cast<bool>(member_[run]) : gap_contains(*set_, run);
}

LanguageState LanguageAutomaton::step(LanguageState state, std::uint8_t letter) const {
    if (state.dead) return state;
    if (letter == 0) {
        if (state.run >= run_bound_) return {state.seen_one, state.run, true};
        if (state.run >= run_cap_) {
            throw std::out_of_range("zero run exceeds the automaton horizon");
        }
        return {state.seen_one, state.run + 1, false};
    }
    if (state.seen_one && !gap_allowed(state.run)) {
        return {true, state.run, true};
    }
    return {true, 0, false};
}

LanguageState LanguageAutomaton::read(const Word& w, LanguageState from) const {
    for (auto letter : w.letters()) {
        from = step(from, letter);
        if (from.dead) break;
    }
    return from;
}

Count count_language(std::size_t n, const GapSet& set, std::size_t max_length) {
    check_length(n, max_length);
    const LanguageAutomaton automaton(set, n);
    try {
        return continuation_sum<Count>(automaton, automaton.start(), n, Count(1), Count(1));
    } catch (const std::overflow_error& e) {
        throw NumericError(std::string("language count overflow: ") + e.what());
    }
}

Count count_core(std::size_t n, const GapSet& set, std::size_t max_length) {
    check_length(n, max_length);
    const std::vector<Gap> gaps = gap_enumerate(set, n == 0 ? 0 : n - 1);
    std::vector<Count> g(n + 1, Count(0));
    g[0] = 1;
    try {
        for (std::size_t m = 1; m <= n; ++m) {
            for (Gap s : gaps) {
                if (s + 1 > m) break;
                g[m] += g[m - s - 1];
            }
        }
    } catch (const std::overflow_error& e) {
        throw NumericError(std::string("core count overflow: ") + e.what());
    }
    return g[n];
}

LanguageEnumerator::LanguageEnumerator(std::size_t n, const GapSet& set, std::size_t cap)
    : automaton_(set, n), n_(n), remaining_(cap), letters_(n, 0), states_(n + 1) {}

// Completes letters_[pos..n) with the lexicographically smallest allowable
// suffix. Live states always extend, so this only fails on a dead start.
bool LanguageEnumerator::fill_from(std::size_t pos) {
    for (std::size_t i = pos; i < n_; ++i) {
        LanguageState next = automaton_.step(states_[i], 0);
        letters_[i] = 0;
        if (next.dead) {
            next = automaton_.step(states_[i], 1);
            letters_[i] = 1;
            if (next.dead) return false;
        }
        states_[i + 1] = next;
    }
    return true;
}

std::optional<Word> LanguageEnumerator::next() {
    if (exhausted_ || remaining_ == 0) return std::nullopt;
    if (!started_) {
        started_ = true;
        states_[0] = automaton_.start();
        if (!fill_from(0)) {
            exhausted_ = true;
            return std::nullopt;
        }
    } else {
        // Rightmost 0 that can become a 1.
        std::size_t i = n_;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (letters_[i] == 0) {
                const LanguageState flipped = automaton_.step(states_[i], 1);
                if (!flipped.dead) {
                    letters_[i] = 1;
                    states_[i + 1] = flipped;
                    advanced = fill_from(i + 1);
                    break;
                }
            }
        }
        if (!advanced) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    --remaining_;
    return Word(letters_);
}

std::vector<Word> enumerate_language(std::size_t n, const GapSet& set, std::size_t cap) {
    std::vector<Word> out;
    LanguageEnumerator it(n, set, cap);
    while (auto w = it.next()) out.push_back(std::move(*w));
    return out;
}

namespace {

void collect_core(std::size_t remaining, const std::vector<Gap>& gaps_desc, Word& prefix,
                  std::vector<Word>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    // Longer zero runs first gives lexicographic order.
    for (Gap s : gaps_desc) {
        if (s + 1 > remaining) continue;
        const std::size_t mark = prefix.length();
        prefix.append_zeros(s);
        prefix.push_back(1);
        collect_core(remaining - s - 1, gaps_desc, prefix, out, cap);
        prefix = prefix.prefix(mark);
        if (out.size() >= cap) return;
    }
}

}  // namespace

std::vector<Word> enumerate_core(std::size_t n, const GapSet& set, std::size_t cap) {
    std::vector<Word> out;
    if (cap == 0) return out;
    std::vector<Gap> gaps = gap_enumerate(set, n == 0 ? 0 : n - 1);
    std::reverse(gaps.begin(), gaps.end());
    Word prefix;
    collect_core(n, gaps, prefix, out, cap);
    return out;
}

Word sample_word(std::size_t n, const GapSet& set, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<Gap> gaps = gap_enumerate(set, n);
    Word w;
    while (w.length() < n) {
        const std::size_t remaining = n - w.length();
        // Gaps s with s + 1 ≤ remaining.
        const auto fit = static_cast<std::size_t>(
            std::upper_bound(gaps.begin(), gaps.end(), static_cast<Gap>(remaining - 1)) -
            gaps.begin());
        if (fit == 0) {
            w.append_zeros(remaining);
            break;
        }
        // Modulo keeps the stream identical across standard libraries.
        const Gap s = gaps[rng() % fit];
        w.append_zeros(s);
        w.push_back(1);
    }
    if (!is_allowable(w, set)) {
        throw DomainError("no allowable word of length " + std::to_string(n) +
                          " could be assembled for S = " + set.describe());
    }
    return w;
}

}  // namespace sgap
