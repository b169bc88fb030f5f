#include "sgap/gap_set.hpp"

#include "sgap/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sgap {

GapSet GapSet::finite(std::vector<Gap> values) {
    if (values.empty()) {
        throw DomainError("gap set must be non-empty");
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
        throw DomainError("gap set contains duplicate values");
    }
    GapSet set;
    set.kind_ = GapKind::Finite;
    set.values_ = std::move(values);
    return set;
}

GapSet GapSet::arithmetic(Gap start, Gap step) {
    if (step == 0) {
        throw DomainError("arithmetic gap set needs a positive step");
    }
    GapSet set;
    set.kind_ = GapKind::Arithmetic;
    set.start_ = start;
    set.step_ = step;
    return set;
}

GapSet GapSet::primes() {
    GapSet set;
    set.kind_ = GapKind::Primes;
    return set;
}

GapSet GapSet::naturals_from(Gap offset) {
    GapSet set;
    set.kind_ = GapKind::NaturalsFrom;
    set.start_ = offset;
    return set;
}

GapSet GapSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read gap file '" + path.string() + "'");
    }
    std::vector<Gap> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        Gap value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": expected a non-negative integer, got '" +
                             std::string(begin, end) + "'");
        }
        if (!values.empty() && value <= values.back()) {
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             (value == values.back() ? ": duplicate value "
                                                     : ": values must be ascending, got ") +
                             std::to_string(value));
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw InputError("gap file '" + path.string() + "' holds no values");
    }
    GapSet set;
    set.kind_ = GapKind::FileBacked;
    set.values_ = std::move(values);
    set.source_ = path;
    return set;
}

bool GapSet::is_infinite() const noexcept {
    return kind_ == GapKind::Arithmetic || kind_ == GapKind::Primes ||
           kind_ == GapKind::NaturalsFrom;
}

Gap GapSet::min() const {
    switch (kind_) {
    case GapKind::Finite:
    case GapKind::FileBacked:
        return values_.front();
    case GapKind::Arithmetic:
    case GapKind::NaturalsFrom:
        return start_;
    case GapKind::Primes:
        return 2;
    }
    return 0;
}

Gap GapSet::max() const {
    if (is_infinite()) {
        throw DomainError("max() of an infinite gap set");
    }
    return values_.back();
}

std::size_t GapSet::size() const noexcept {
    return is_infinite() ? 0 : values_.size();
}

std::string GapSet::describe() const {
    std::ostringstream out;
    switch (kind_) {
    case GapKind::Finite:
    case GapKind::FileBacked: {
        out << (kind_ == GapKind::Finite ? "finite {" : "file {");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i == 8 && values_.size() > 10) {
                out << ", ... (" << values_.size() << " values)";
                break;
            }
            out << (i ? ", " : "") << values_[i];
        }
        out << '}';
        break;
    }
    case GapKind::Arithmetic:
        out << "arithmetic {" << start_ << " + " << step_ << "k}";
        break;
    case GapKind::Primes:
        out << "primes";
        break;
    case GapKind::NaturalsFrom:
        out << "naturals from " << start_;
        break;
    }
    return out.str();
}

bool is_prime(Gap n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (Gap d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<Gap> primes_up_to(Gap limit) {
    std::vector<Gap> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (Gap p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (Gap q = p * p; p <= limit / p && q <= limit; q += p) {
            composite[q] = true;
        }
    }
    return out;
}

bool gap_contains(const GapSet& set, Gap s) {
    switch (set.kind()) {
    case GapKind::Finite:
    case GapKind::FileBacked:
        return std::binary_search(set.values().begin(), set.values().end(), s);
    case GapKind::Arithmetic:
        return s >= set.start() && (s - set.start()) % set.step() == 0;
    case GapKind::Primes:
        return is_prime(s);
    case GapKind::NaturalsFrom:
        return s >= set.offset();
    }
    return false;
}

std::vector<Gap> gap_enumerate(const GapSet& set, Gap s_max) {
    std::vector<Gap> out;
    switch (set.kind()) {
    case GapKind::Finite:
    case GapKind::FileBacked: {
        const auto& v = set.values();
        out.assign(v.begin(), std::upper_bound(v.begin(), v.end(), s_max));
        break;
    }
    case GapKind::Arithmetic:
        for (Gap s = set.start(); s <= s_max; s += set.step()) {
            out.push_back(s);
            if (s_max - s < set.step()) break;
        }
        break;
    case GapKind::Primes:
        out = primes_up_to(s_max);
        break;
    case GapKind::NaturalsFrom:
        for (Gap s = set.offset(); s <= s_max; ++s) {
            out.push_back(s);
            if (s == s_max) break;
        }
        break;
    }
    return out;
}

std::vector<bool> gap_membership(const GapSet& set, Gap s_max) {
    std::vector<bool> table(s_max + 1, false);
    for (Gap s : gap_enumerate(set, s_max)) {
        table[s] = true;
    }
    return table;
}

}  // namespace sgap
