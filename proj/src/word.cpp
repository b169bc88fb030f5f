#include "sgap/word.hpp"

#include "sgap/errors.hpp"

#include <algorithm>

namespace sgap {

Word::Word(std::string_view letters) {
    letters_.reserve(letters.size());
    for (char c : letters) {
        if (c != '0' && c != '1') {
            throw DomainError("word letters must be '0' or '1', got '" +
                              std::string(1, c) + "'");
        }
        letters_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    if (std::any_of(letters_.begin(), letters_.end(), [](auto l) { return l > 1; })) {
        throw DomainError("word letters must be 0 or 1");
    }
}

std::size_t Word::zeros() const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 0));
}

void Word::push_back(std::uint8_t letter) {
    if (letter > 1) {
        throw DomainError("word letters must be 0 or 1");
    }
    letters_.push_back(letter);
}

void Word::append_zeros(std::size_t count) {
    letters_.insert(letters_.end(), count, 0);
}

Word Word::prefix(std::size_t n) const {
    return subword(0, n);
}

Word Word::subword(std::size_t pos, std::size_t n) const {
    if (pos > length() || n > length() - pos) {
        throw DomainError("subword out of range");
    }
    Word out;
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
    return out;
}

Word Word::operator+(const Word& other) const {
    Word out = *this;
    out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
    return out;
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto l : letters_) out.push_back(static_cast<char>('0' + l));
    return out;
}

RunProfile run_profile(const Word& w) {
    RunProfile p;
    std::size_t run = 0;
    for (auto letter : w.letters()) {
        if (letter == 0) {
            ++run;
            continue;
        }
        if (p.ones == 0) {
            p.leading = run;
        } else {
            p.internal_gaps.push_back(run);
        }
        ++p.ones;
        run = 0;
    }
    if (p.ones == 0) {
        p.leading = run;
    } else {
        p.trailing = run;
    }
    return p;
}

Word from_profile(const RunProfile& profile) {
    if (profile.ones == 0) {
        if (!profile.internal_gaps.empty() || profile.trailing != 0) {
            throw DomainError("run profile without ones must be a single zero run");
        }
        Word w;
        w.append_zeros(profile.leading);
        return w;
    }
    if (profile.internal_gaps.size() + 1 != profile.ones) {
        throw DomainError("run profile needs ones - 1 internal gaps");
    }
    Word w;
    w.append_zeros(profile.leading);
    w.push_back(1);
    for (auto gap : profile.internal_gaps) {
        w.append_zeros(gap);
        w.push_back(1);
    }
    w.append_zeros(profile.trailing);
    return w;
}

bool is_allowable(const Word& w, const GapSet& set) {
    const RunProfile p = run_profile(w);
    for (auto gap : p.internal_gaps) {
        if (!gap_contains(set, gap)) return false;
    }
    if (set.is_infinite()) return true;
    const Gap bound = set.max();
    return p.leading <= bound && p.trailing <= bound;
}

}  // namespace sgap
