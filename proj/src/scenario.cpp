#include "sgap/scenario.hpp"

#include "sgap/box_dimension.hpp"
#include "sgap/errors.hpp"
#include "sgap/language.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sgap {

std::vector<double> BoxSettings::scales() const {
    return scale_ladder(base, j_min, j_max);
}

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

const std::set<std::string, std::less<>> known_keys = {
    "sgap.kind", "sgap.values", "sgap.start", "sgap.step", "sgap.offset", "sgap.path",
    "contraction.c0", "contraction.c1", "contraction.c0_lower", "contraction.c0_upper",
    "contraction.c1_lower", "contraction.c1_upper",
    "ifs.dimension", "ifs.osc",
    "ifs.map0.ratio", "ifs.map0.angle", "ifs.map0.translation",
    "ifs.map1.ratio", "ifs.map1.angle", "ifs.map1.translation",
    "solver.tolerance", "solver.series_eps", "solver.t_max", "solver.max_terms",
    "points.depth", "points.cap", "points.seed",
    "boxdim.base", "boxdim.j_min", "boxdim.j_max", "boxdim.drop_low", "boxdim.drop_high",
    "boxdim.slack",
    "pressure.n_max", "pressure.t_values",
    "language.n_max",
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

class ConfigReader {
public:
    ConfigReader(std::string origin, std::map<std::string, Entry> entries)
        : origin_(std::move(origin)), entries_(std::move(entries)) {}

    [[noreturn]] void fail(int line, const std::string& message) const {
        throw ConfigError(origin_ + ":" + std::to_string(line) + ": " + message);
    }
    [[noreturn]] void fail_missing(const std::string& key) const {
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    int line_of(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }
    const Entry& entry(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) fail_missing(key);
        return it->second;
    }

    double real(const std::string& key) const { return parse_real(entry(key)); }
    double real(const std::string& key, double fallback) const {
        return has(key) ? real(key) : fallback;
    }

    std::uint64_t integer(const std::string& key) const {
        const Entry& e = entry(key);
        std::uint64_t v = 0;
        const char* end = e.value.data() + e.value.size();
        auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            fail(e.line, "'" + key + "' expects a non-negative integer, got '" + e.value + "'");
        }
        return v;
    }
    std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
        return has(key) ? integer(key) : fallback;
    }

    std::vector<double> real_list(const std::string& key) const {
        const Entry& e = entry(key);
        std::vector<double> out;
        for (const std::string& item : split_list(e)) {
            out.push_back(parse_real(Entry{item, e.line}));
        }
        return out;
    }

    std::vector<std::uint64_t> integer_list(const std::string& key) const {
        const Entry& e = entry(key);
        std::vector<std::uint64_t> out;
        for (const std::string& item : split_list(e)) {
            std::uint64_t v = 0;
            const char* end = item.data() + item.size();
            auto [ptr, ec] = std::from_chars(item.data(), end, v);
            if (ec != std::errc() || ptr != end) {
                fail(e.line, "'" + key + "' expects non-negative integers, got '" + item + "'");
            }
            out.push_back(v);
        }
        return out;
    }

    bool boolean(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const Entry& e = entry(key);
        if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
        if (e.value == "false" || e.value == "no" || e.value == "0") return false;
        fail(e.line, "'" + key + "' expects true or false, got '" + e.value + "'");
    }

    void reject_unless(bool allowed, const std::string& key, const std::string& why) const {
        if (!allowed && has(key)) fail(line_of(key), "key '" + key + "' " + why);
    }

private:
    std::vector<std::string> split_list(const Entry& e) const {
        std::vector<std::string> items;
        std::string normalized = e.value;
        for (char& c : normalized) {
            if (c == ',') c = ' ';
        }
        std::istringstream in(normalized);
        std::string item;
        while (in >> item) items.push_back(item);
        if (items.empty()) fail(e.line, "empty list");
        return items;
    }

    // Decimal or a/b.
    double parse_real(const Entry& e) const {
        auto parse_plain = [&](const std::string& text) {
            double v = 0.0;
            const char* end = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(text.data(), end, v);
            if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
                fail(e.line, "malformed number '" + e.value + "'");
            }
            return v;
        };
        const auto slash = e.value.find('/');
        if (slash == std::string::npos) return parse_plain(e.value);
        const double num = parse_plain(trim(e.value.substr(0, slash)));
        const double den = parse_plain(trim(e.value.substr(slash + 1)));
        if (den == 0.0) fail(e.line, "division by zero in '" + e.value + "'");
        return num / den;
    }

    std::string origin_;
    std::map<std::string, Entry> entries_;
};

GapSet read_gaps(const ConfigReader& cfg, const std::filesystem::path& base_dir) {
    const Entry& kind = cfg.entry("sgap.kind");
    const std::string& k = kind.value;
    cfg.reject_unless(k == "finite", "sgap.values", "only applies to sgap.kind = finite");
    cfg.reject_unless(k == "arithmetic", "sgap.start", "only applies to sgap.kind = arithmetic");
    cfg.reject_unless(k == "arithmetic", "sgap.step", "only applies to sgap.kind = arithmetic");
    cfg.reject_unless(k == "naturals", "sgap.offset", "only applies to sgap.kind = naturals");
    cfg.reject_unless(k == "file", "sgap.path", "only applies to sgap.kind = file");
    try {
        if (k == "finite") {
            const Entry& e = cfg.entry("sgap.values");
            if (trim(e.value).empty()) cfg.fail(e.line, "gap set S must be non-empty");
            return GapSet::finite(cfg.integer_list("sgap.values"));
        }
        if (k == "arithmetic") {
            const auto step = cfg.integer("sgap.step");
            if (step == 0) cfg.fail(cfg.line_of("sgap.step"), "sgap.step must be positive");
            return GapSet::arithmetic(cfg.integer("sgap.start"), step);
        }
        if (k == "primes") return GapSet::primes();
        if (k == "naturals") return GapSet::naturals_from(cfg.integer("sgap.offset", 0));
        if (k == "file") {
            std::filesystem::path p = cfg.entry("sgap.path").value;
            if (p.is_relative()) p = base_dir / p;
            return GapSet::from_file(p);
        }
    } catch (const DomainError& e) {
        cfg.fail(kind.line, e.what());
    } catch (const InputError& e) {
        cfg.fail(cfg.line_of("sgap.path"), e.what());
    }
    cfg.fail(kind.line, "unknown sgap.kind '" + k +
                            "' (expected finite, arithmetic, primes, naturals, or file)");
}

ContractionPair read_contraction(const ConfigReader& cfg) {
    auto side = [&](const std::string& map, const std::string& bound) {
        const std::string shorthand = "contraction." + map;
        const std::string full = "contraction." + map + "_" + bound;
        if (cfg.has(shorthand) && cfg.has(full)) {
            cfg.fail(cfg.line_of(full), "'" + full + "' conflicts with '" + shorthand + "'");
        }
        if (cfg.has(full)) return cfg.real(full);
        if (cfg.has(shorthand)) return cfg.real(shorthand);
        cfg.fail_missing(full);
    };
    ContractionPair pair{side("c0", "lower"), side("c0", "upper"), side("c1", "lower"),
                         side("c1", "upper")};
    auto line_for = [&](const std::string& map) {
        const int l = cfg.line_of("contraction." + map + "_lower");
        return l ? l : cfg.line_of("contraction." + map);
    };
    for (auto [lo, hi, map] : {std::tuple{pair.c0_lower, pair.c0_upper, "c0"},
                               std::tuple{pair.c1_lower, pair.c1_upper, "c1"}}) {
        if (!(lo > 0.0 && lo < 1.0) || !(hi > 0.0 && hi < 1.0)) {
            cfg.fail(line_for(map), std::string("contraction ratios for ") + map +
                                        " must lie in (0, 1)");
        }
        if (lo > hi) {
            cfg.fail(line_for(map), std::string(map) + "_lower exceeds " + map + "_upper");
        }
    }
    return pair;
}

Similarity read_map(const ConfigReader& cfg, const std::string& name, int dimension) {
    const std::string prefix = "ifs." + name + ".";
    const double ratio = cfg.real(prefix + "ratio");
    const double angle = cfg.real(prefix + "angle", 0.0);
    const std::vector<double> t = cfg.real_list(prefix + "translation");
    if (static_cast<int>(t.size()) != dimension) {
        cfg.fail(cfg.line_of(prefix + "translation"),
                 "translation needs " + std::to_string(dimension) + " component(s)");
    }
    if (dimension == 1 && angle != 0.0) {
        cfg.fail(cfg.line_of(prefix + "angle"), "rotation angle only applies in dimension 2");
    }
    if (!(ratio > 0.0 && ratio < 1.0)) {
        cfg.fail(cfg.line_of(prefix + "ratio"), "similarity ratio must lie in (0, 1)");
    }
    return Similarity::make(ratio, angle, Point(t[0], dimension == 2 ? t[1] : 0.0));
}

}  // namespace

Scenario parse_config_text(std::string_view text, const std::string& origin,
                           const std::filesystem::path& base_dir) {
    std::map<std::string, Entry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys.count(key)) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (entries.count(key)) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                              "' (first set on line " + std::to_string(entries[key].line) + ")");
        }
        entries.emplace(key, Entry{value, lineno});
    }

    const ConfigReader cfg(origin, std::move(entries));
    Scenario sc;
    sc.source = origin;
    sc.gaps = read_gaps(cfg, base_dir);
    sc.contraction = read_contraction(cfg);

    const bool any_ifs = cfg.has("ifs.dimension") || cfg.has("ifs.osc") ||
                         cfg.has("ifs.map0.ratio") || cfg.has("ifs.map1.ratio") ||
                         cfg.has("ifs.map0.translation") || cfg.has("ifs.map1.translation") ||
                         cfg.has("ifs.map0.angle") || cfg.has("ifs.map1.angle");
    if (any_ifs) {
        SimilarityIFS ifs;
        ifs.dimension = static_cast<int>(cfg.integer("ifs.dimension", 1));
        if (ifs.dimension != 1 && ifs.dimension != 2) {
            cfg.fail(cfg.line_of("ifs.dimension"), "ifs.dimension must be 1 or 2");
        }
        ifs.map0 = read_map(cfg, "map0", ifs.dimension);
        ifs.map1 = read_map(cfg, "map1", ifs.dimension);
        ifs.osc_attested = cfg.boolean("ifs.osc", false);
        try {
            ifs.check_consistent(sc.contraction);
        } catch (const DomainError& e) {
            const int line = std::string(e.what()).rfind("map0", 0) == 0
                                 ? cfg.line_of("ifs.map0.ratio")
                                 : cfg.line_of("ifs.map1.ratio");
            cfg.fail(line, std::string("inconsistent ratios: ") + e.what());
        }
        sc.ifs = ifs;
    }

    auto positive = [&](const std::string& key, double v) {
        if (!(v > 0.0)) cfg.fail(cfg.line_of(key), "'" + key + "' must be positive");
        return v;
    };
    auto positive_int = [&](const std::string& key, std::uint64_t v) {
        if (v == 0) cfg.fail(cfg.line_of(key), "'" + key + "' must be positive");
        return v;
    };

    sc.solver.tolerance = positive("solver.tolerance", cfg.real("solver.tolerance", 1e-9));
    sc.solver.series_eps = positive("solver.series_eps", cfg.real("solver.series_eps", 1e-12));
    sc.solver.t_max = positive("solver.t_max", cfg.real("solver.t_max", 1024.0));
    sc.solver.max_terms =
        positive_int("solver.max_terms", cfg.integer("solver.max_terms", 10'000'000));

    sc.points.depth = positive_int("points.depth", cfg.integer("points.depth", 14));
    sc.points.cap = positive_int("points.cap", cfg.integer("points.cap", 200'000));
    sc.points.seed = cfg.integer("points.seed", 1);

    sc.boxdim.base = cfg.real("boxdim.base", 2.0);
    if (!(sc.boxdim.base > 1.0)) cfg.fail(cfg.line_of("boxdim.base"), "boxdim.base must exceed 1");
    sc.boxdim.j_min = static_cast<int>(cfg.integer("boxdim.j_min", 2));
    sc.boxdim.j_max = static_cast<int>(cfg.integer("boxdim.j_max", 12));
    if (sc.boxdim.j_min > sc.boxdim.j_max || sc.boxdim.j_max > 60) {
        cfg.fail(cfg.has("boxdim.j_max") ? cfg.line_of("boxdim.j_max") : cfg.line_of("boxdim.j_min"),
                 "boxdim ladder needs j_min <= j_max <= 60");
    }
    sc.boxdim.drop_low = cfg.integer("boxdim.drop_low", 2);
    sc.boxdim.drop_high = cfg.integer("boxdim.drop_high", 2);
    const auto ladder = static_cast<std::size_t>(sc.boxdim.j_max - sc.boxdim.j_min + 1);
    if (ladder < sc.boxdim.drop_low + sc.boxdim.drop_high + 2) {
        cfg.fail(cfg.has("boxdim.drop_low") ? cfg.line_of("boxdim.drop_low")
                                            : cfg.line_of("boxdim.drop_high"),
                 "boxdim drops leave fewer than two scales");
    }
    sc.boxdim.slack = cfg.real("boxdim.slack", 0.05);
    if (!(sc.boxdim.slack >= 0.0)) cfg.fail(cfg.line_of("boxdim.slack"), "boxdim.slack must be >= 0");

    sc.pressure.n_max = positive_int("pressure.n_max", cfg.integer("pressure.n_max", 20));
    if (cfg.has("pressure.t_values")) sc.pressure.t_values = cfg.real_list("pressure.t_values");
    sc.language.n_max = cfg.integer("language.n_max", 20);
    if (sc.language.n_max > default_max_count_length) {
        cfg.fail(cfg.line_of("language.n_max"), "language.n_max may not exceed 64");
    }
    return sc;
}

Scenario parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open scenario file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.string(), path.parent_path());
}

}  // namespace sgap
