#include "sgap/cli.hpp"

#include "sgap/box_dimension.hpp"
#include "sgap/csv.hpp"
#include "sgap/errors.hpp"
#include "sgap/language.hpp"
#include "sgap/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace sgap {

namespace {

std::string num(double v) {
    return format_double(v);
}

std::string describe(const Enclosure& e) {
    return "[" + num(e.lo) + ", " + num(e.hi) + "] (width " + num(e.width()) + ")";
}

// Writes through `writer` either to out_dir/name or to `out`.
template <class Writer>
void emit(const RunOptions& options, const std::string& name, std::ostream& out, Writer&& writer) {
    if (!options.out_dir) {
        writer(out);
        return;
    }
    std::filesystem::create_directories(*options.out_dir);
    const auto path = *options.out_dir / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path.string() + "'");
    writer(file);
    out << "wrote " << path.string() << '\n';
}

const SimilarityIFS& require_ifs(const Scenario& sc, std::string_view subcommand) {
    if (!sc.ifs) {
        throw ConfigError(sc.source.string() + ": '" + std::string(subcommand) +
                          "' needs an ifs section (ifs.map0.*, ifs.map1.*)");
    }
    return *sc.ifs;
}

int cmd_bounds(const Scenario& sc, std::ostream& out) {
    const DimensionBounds b = bounds(sc.contraction, sc.gaps, sc.solver);
    out << "S = " << sc.gaps.describe() << '\n';
    out << "h = " << num(b.h.mid()) << "  enclosure " << describe(b.h) << '\n';
    out << "H = " << num(b.H.mid()) << "  enclosure " << describe(b.H) << '\n';
    if (b.widened) out << "note: enclosure wider than tolerance (floating-point plateau)\n";
    return exit_success;
}

int cmd_entropy(const Scenario& sc, const RunOptions& options, std::ostream& out) {
    const EntropyResult e = solve_entropy(sc.gaps, sc.solver);
    out << "S = " << sc.gaps.describe() << '\n';
    out << "lambda = " << num(e.lambda.mid()) << "  enclosure " << describe(e.lambda) << '\n';
    if (options.bits) {
        out << "entropy = " << num(e.entropy_bits()) << " bits (" << num(e.entropy) << " nats)\n";
    } else {
        out << "entropy = " << num(e.entropy) << " nats (" << num(e.entropy_bits()) << " bits)\n";
    }
    if (e.widened) out << "note: enclosure wider than tolerance (floating-point plateau)\n";
    return exit_success;
}

int cmd_pressure(const Scenario& sc, const RunOptions& options, std::ostream& out) {
    std::vector<PressureRow> rows;
    const ContractionPair& c = sc.contraction;
    for (std::size_t n = 1; n <= sc.pressure.n_max; ++n) {
        for (double t : sc.pressure.t_values) {
            const PressureSample lo = pressure_estimate(n, t, c.c0_lower, c.c1_lower, sc.gaps,
                                                        SumKind::Language);
            const PressureSample hi = pressure_estimate(n, t, c.c0_upper, c.c1_upper, sc.gaps,
                                                        SumKind::Language);
            rows.push_back({n, t, lo.weighted_sum, lo.pressure, hi.weighted_sum, hi.pressure});
        }
    }
    emit(options, "pressure.csv", out, [&](std::ostream& o) { write_pressure_csv(o, rows); });
    return exit_success;
}

int cmd_language(const Scenario& sc, const RunOptions& options, std::ostream& out) {
    std::vector<LanguageRow> rows;
    for (std::size_t n = 0; n <= sc.language.n_max; ++n) {
        rows.push_back({n, count_language(n, sc.gaps), count_core(n, sc.gaps)});
    }
    emit(options, "language.csv", out, [&](std::ostream& o) { write_language_csv(o, rows); });
    return exit_success;
}

PointCloud make_cloud(const Scenario& sc, std::string_view subcommand) {
    const SimilarityIFS& ifs = require_ifs(sc, subcommand);
    return generate_points(ifs, sc.gaps, sc.points.depth, sc.points.cap, sc.points.seed);
}

int cmd_points(const Scenario& sc, const RunOptions& options, std::ostream& out) {
    const PointCloud cloud = make_cloud(sc, "points");
    emit(options, "points.csv", out, [&](std::ostream& o) { write_point_cloud_csv(o, cloud); });
    return exit_success;
}

int cmd_boxdim(const Scenario& sc, const RunOptions& options, std::ostream& out,
               std::ostream& err) {
    const PointCloud cloud = make_cloud(sc, "boxdim");
    const BoxCountSeries series = box_counts(cloud, sc.boxdim.scales());
    const BoxDimensionEstimate est =
        estimate_box_dimension(series, sc.boxdim.drop_low, sc.boxdim.drop_high);
    emit(options, "boxcounts.csv", out, [&](std::ostream& o) { write_box_counts_csv(o, series); });
    // Keep stdout a clean CSV when no output directory is given.
    std::ostream& summary = options.out_dir ? out : err;
    summary << "points = " << cloud.count() << '\n';
    summary << "slope = " << num(est.slope) << '\n';
    summary << "stderr = " << num(est.standard_error) << '\n';
    return exit_success;
}

int cmd_verify(const Scenario& sc, const RunOptions& options, std::ostream& out) {
    const std::vector<CheckResult> results = run_verification(sc);
    const bool all_pass =
        std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    if (options.json_report) {
        nlohmann::json report = nlohmann::json::array();
        for (const auto& r : results) {
            report.push_back({{"name", r.name},
                              {"expected", r.expected},
                              {"got", r.got},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass},
                              {"skipped", r.skipped},
                              {"note", r.note}});
        }
        emit(options, "verify.json", out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    } else {
        for (const auto& r : results) {
            out << (r.skipped ? "SKIP " : r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.skipped) out << ": got " << std::setprecision(12) << r.got << ", expected " << r.expected;
            if (!r.note.empty()) out << " (" << r.note << ')';
            out << '\n';
        }
        out << (all_pass ? "verify: all checks passed" : "verify: FAILED") << '\n';
    }
    return all_pass ? exit_success : exit_verification;
}

}  // namespace

int run(std::string_view subcommand, Scenario scenario, const RunOptions& options,
        std::ostream& out, std::ostream& err) {
    if (options.seed) scenario.points.seed = *options.seed;
    try {
        if (subcommand == "bounds") return cmd_bounds(scenario, out);
        if (subcommand == "entropy") return cmd_entropy(scenario, options, out);
        if (subcommand == "pressure-table") return cmd_pressure(scenario, options, out);
        if (subcommand == "language-count") return cmd_language(scenario, options, out);
        if (subcommand == "points") return cmd_points(scenario, options, out);
        if (subcommand == "boxdim") return cmd_boxdim(scenario, options, out, err);
        if (subcommand == "verify") return cmd_verify(scenario, options, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return exit_config;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    } catch (const DomainError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }
    err << "unknown subcommand '" << subcommand << "'\n";
    return exit_usage;
}

}  // namespace sgap
