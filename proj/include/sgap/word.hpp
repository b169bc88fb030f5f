#pragma once

#include "sgap/gap_set.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgap {

/// Finite word over the alphabet {0, 1}.
class Word {
public:
    Word() = default;
    /// Parses a string of '0'/'1' characters; throws DomainError otherwise.
    explicit Word(std::string_view letters);
    explicit Word(std::vector<std::uint8_t> letters);

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
    std::span<const std::uint8_t> letters() const noexcept { return letters_; }

    std::size_t zeros() const noexcept;
    std::size_t ones() const noexcept { return length() - zeros(); }

    void push_back(std::uint8_t letter);
    void append_zeros(std::size_t count);
    Word prefix(std::size_t n) const;
    Word subword(std::size_t pos, std::size_t n) const;
    Word operator+(const Word& other) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<std::uint8_t> letters_;
};

/// Zero-run decomposition 0^leading 1 0^g₁ 1 … 1 0^trailing.
/// For a word with no 1s, leading holds the whole length and trailing is 0.
struct RunProfile {
    std::size_t leading = 0;
    std::vector<std::size_t> internal_gaps;
    std::size_t trailing = 0;
    std::size_t ones = 0;

    friend bool operator==(const RunProfile&, const RunProfile&) = default;
};

RunProfile run_profile(const Word& w);
Word from_profile(const RunProfile& profile);

/// Membership in the language of X(S).
///
/// Internal gaps must lie in S. For finite S the leading run, the trailing
/// run, and an all-zero word are each bounded by max(S); infinite S leaves
/// them unconstrained. The empty word is allowable.
bool is_allowable(const Word& w, const GapSet& set);

}  // namespace sgap
