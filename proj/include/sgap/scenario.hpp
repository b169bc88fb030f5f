#pragma once

#include "sgap/gap_set.hpp"
#include "sgap/geometry.hpp"
#include "sgap/pressure.hpp"
#include "sgap/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace sgap {

struct PointSettings {
    std::size_t depth = 14;
    std::size_t cap = 200'000;
    std::uint64_t seed = 1;
};

struct BoxSettings {
    double base = 2.0;
    int j_min = 2;
    int j_max = 12;
    std::size_t drop_low = 2;
    std::size_t drop_high = 2;
    /// Allowed distance of the estimate outside [h, H] in `verify`.
    double slack = 0.05;

    std::vector<double> scales() const;
};

struct PressureSettings {
    std::size_t n_max = 20;
    std::vector<double> t_values{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
};

struct LanguageSettings {
    std::size_t n_max = 20;
};

struct Scenario {
    std::filesystem::path source;
    GapSet gaps = GapSet::naturals_from(1);
    ContractionPair contraction;
    std::optional<SimilarityIFS> ifs;
    SolverSettings solver;
    PointSettings points;
    BoxSettings boxdim;
    PressureSettings pressure;
    LanguageSettings language;
};

/// Parses a `key = value` scenario file. '#' starts a comment. Keys are
/// namespaced (sgap., contraction., ifs., solver., points., boxdim.,
/// pressure., language.); unknown or repeated keys are rejected. Numbers
/// accept decimal, exponent, and `a/b` forms. Throws ConfigError with a
/// "file:line:" prefix.
Scenario parse_config(const std::filesystem::path& path);

/// Same, from text; relative gap-file paths resolve against base_dir.
Scenario parse_config_text(std::string_view text, const std::string& origin,
                           const std::filesystem::path& base_dir = {});

}  // namespace sgap
