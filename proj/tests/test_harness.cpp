#include "sgap/cli.hpp"
#include "sgap/csv.hpp"
#include "sgap/errors.hpp"
#include "sgap/scenario.hpp"
#include "sgap/verify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sgap;

namespace {

const char* golden_text = R"(# golden mean
sgap.kind = naturals
sgap.offset = 1
contraction.c0 = 1/3
contraction.c1 = 1/3
)";

const char* cantor_text = R"(
sgap.kind = naturals
sgap.offset = 0
contraction.c0 = 1/3
contraction.c1 = 1/3
ifs.dimension = 1
ifs.osc = true
ifs.map0.ratio = 1/3
ifs.map0.translation = 0
ifs.map1.ratio = 1/3
ifs.map1.translation = 2/3
points.depth = 10
)";

std::string config_error(const std::string& text) {
    try {
        parse_config_text(text, "case.cfg");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured run_captured(std::string_view cmd, const Scenario& sc, RunOptions opts = {}) {
    std::ostringstream out, err;
    const int code = run(cmd, sc, opts, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("minimal scenario gets defaults") {
    auto sc = parse_config_text(golden_text, "golden.cfg");
    CHECK(sc.gaps.kind() == GapKind::NaturalsFrom);
    CHECK(sc.gaps.offset() == 1);
    CHECK(sc.contraction.c0_lower == doctest::Approx(1.0 / 3).epsilon(1e-16));
    CHECK(sc.contraction.c1_upper == doctest::Approx(1.0 / 3).epsilon(1e-16));
    CHECK_FALSE(sc.ifs.has_value());
    CHECK(sc.solver.tolerance == 1e-9);
    CHECK(sc.solver.series_eps == 1e-12);
    CHECK(sc.solver.t_max == 1024.0);
    CHECK(sc.points.depth == 14);
    CHECK(sc.points.cap == 200000);
    CHECK(sc.boxdim.drop_low == 2);
    CHECK(sc.boxdim.drop_high == 2);
    auto scales = sc.boxdim.scales();
    REQUIRE(scales.size() == 11);
    CHECK(scales.front() == 0.25);
    CHECK(scales.back() == std::ldexp(1.0, -12));
}

TEST_CASE("shorthand and full contraction keys conflict") {
    CHECK(config_error(std::string(cantor_text) + "contraction.c0_lower = 0.3\n").find("conflicts") !=
          std::string::npos);
}

TEST_CASE("config errors") {
    const std::string base = "sgap.kind = naturals\nsgap.offset = 1\n";
    CHECK(config_error(base + "contraction.c0_lower = 0.4\ncontraction.c0_upper = 0.3\ncontraction.c1 = 0.3\n")
              .find("case.cfg:3") != std::string::npos);
    CHECK(config_error("sgap.kind = finite\nsgap.values =\ncontraction.c0 = 0.3\ncontraction.c1 = 0.3\n") != "");
    CHECK(config_error(base + "contraction.c0 = 0.3\ncontraction.c1 = 0.3\nsolver.tolrance = 1\n")
              .find("unknown key") != std::string::npos);
    CHECK(config_error(base + "contraction.c0 = 0.3\ncontraction.c0 = 0.3\ncontraction.c1 = 0.3\n")
              .find("duplicate") != std::string::npos);
    CHECK(config_error(base + "contraction.c0 = 0.3\n").find("missing") != std::string::npos);
    CHECK(config_error(base + "contraction.c0 = 1.3\ncontraction.c1 = 0.3\n") != "");
    CHECK(config_error(base + "contraction.c0 = 0.3\ncontraction.c1 = 0.3\nsgap.step = 2\n") != "");
    CHECK(config_error(base + "contraction.c0 = 0.3\ncontraction.c1 = 1/0\n") != "");
    CHECK(config_error(base + "contraction.c0 = 0.3\ncontraction.c1 = 0.3\nsolver.tolerance = 0\n") != "");
    CHECK(config_error("sgap.kind = lattice\ncontraction.c0 = 0.3\ncontraction.c1 = 0.3\n")
              .find("unknown sgap.kind") != std::string::npos);
    // IFS ratios outside the contraction interval
    CHECK(config_error(std::string(cantor_text).replace(std::string(cantor_text).find("map0.ratio = 1/3"),
                                                        16, "map0.ratio = 1/2"))
              .find("inconsistent") != std::string::npos);
    CHECK_THROWS_AS(parse_config("/nonexistent/x.cfg"), ConfigError);
}

TEST_CASE("file-backed scenario resolves relative paths") {
    auto dir = std::filesystem::temp_directory_path() / "sgap_scenario_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "gaps.txt") << "1\n3\n";
        std::ofstream(dir / "s.cfg") << "sgap.kind = file\nsgap.path = gaps.txt\ncontraction.c0 = 0.5\ncontraction.c1 = 0.5\n";
    }
    auto sc = parse_config(dir / "s.cfg");
    CHECK(sc.gaps.values() == std::vector<Gap>{1, 3});
    std::filesystem::remove_all(dir);
}

TEST_CASE("csv round trips") {
    auto sc = parse_config_text(cantor_text, "cantor.cfg");
    auto cloud = generate_points(*sc.ifs, sc.gaps, 8, 1000, 1);
    std::stringstream pts;
    write_point_cloud_csv(pts, cloud);
    CHECK(pts.str().rfind("x\n", 0) == 0);
    auto back = read_point_cloud_csv(pts);
    CHECK(back.points == cloud.points);

    auto series = box_counts(cloud, scale_ladder());
    std::stringstream boxes;
    write_box_counts_csv(boxes, series);
    CHECK(boxes.str().rfind("r,N,ln_inv_r,ln_N\n", 0) == 0);
    auto series_back = read_box_counts_csv(boxes);
    REQUIRE(series_back.size() == series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(series_back.entries[i].scale == series.entries[i].scale);
        CHECK(series_back.entries[i].occupied == series.entries[i].occupied);
    }

    std::vector<PressureRow> rows{{3, 0.5, 1.25, 0.1, 1.5, 0.2}, {4, 2.0, 0.0, std::nullopt, 0.0, std::nullopt}};
    std::stringstream pr;
    write_pressure_csv(pr, rows);
    auto rows_back = read_pressure_csv(pr);
    REQUIRE(rows_back.size() == 2);
    CHECK(rows_back[0].pressure_upper == rows[0].pressure_upper);
    CHECK_FALSE(rows_back[1].pressure_lower.has_value());

    std::vector<LanguageRow> lang{{64, Count(1) << 64, Count(1) << 63}};
    std::stringstream lr;
    write_language_csv(lr, lang);
    auto lang_back = read_language_csv(lr);
    REQUIRE(lang_back.size() == 1);
    CHECK(lang_back[0].language == lang[0].language);

    std::stringstream bad("x\n0.5\nabc\n");
    CHECK_THROWS_AS(read_point_cloud_csv(bad), InputError);
}

TEST_CASE("doubles round trip exactly") {
    for (double v : {0.1, 1.0 / 3, 6.02e23, -1e-300, 0.0}) CHECK(parse_double(format_double(v)) == v);
    CHECK_THROWS_AS(parse_double("1.5x"), InputError);
}

TEST_CASE("bounds subcommand") {
    auto sc = parse_config_text(golden_text, "golden.cfg");
    auto r = run_captured("bounds", sc);
    CHECK(r.code == exit_success);
    CHECK(r.out.find("h = 0.43801787") != std::string::npos);
}

TEST_CASE("entropy subcommand") {
    auto sc = parse_config_text(golden_text, "golden.cfg");
    auto nats = run_captured("entropy", sc);
    CHECK(nats.code == exit_success);
    CHECK(nats.out.find("0.48121182") != std::string::npos);
    auto bits = run_captured("entropy", sc, {.bits = true});
    CHECK(bits.out.find("0.69424191") != std::string::npos);
}

TEST_CASE("points without IFS is a config error") {
    auto sc = parse_config_text(golden_text, "golden.cfg");
    CHECK(run_captured("points", sc).code == exit_config);
    CHECK(run_captured("boxdim", sc).code == exit_config);
    CHECK(run_captured("frobnicate", sc).code == exit_usage);
}

TEST_CASE("numeric failures map to exit 3") {
    auto sc = parse_config_text(golden_text, "golden.cfg");
    sc.solver.max_terms = 3;
    sc.solver.series_eps = 1e-300;
    CHECK(run_captured("bounds", sc).code == exit_numeric);
}

TEST_CASE("outputs are deterministic") {
    auto sc = parse_config_text(cantor_text, "cantor.cfg");
    sc.points.cap = 500;
    sc.points.depth = 20;
    for (auto cmd : {"points", "boxdim", "pressure-table", "language-count"}) {
        auto a = run_captured(cmd, sc, {.seed = 9});
        auto b = run_captured(cmd, sc, {.seed = 9});
        CHECK(a.code == exit_success);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    auto other = run_captured("points", sc, {.seed = 10});
    CHECK(other.out != run_captured("points", sc, {.seed = 9}).out);
}

TEST_CASE("out directory files re-parse") {
    auto sc = parse_config_text(cantor_text, "cantor.cfg");
    auto dir = std::filesystem::temp_directory_path() / "sgap_cli_out";
    std::filesystem::remove_all(dir);
    RunOptions opts{.out_dir = dir};
    for (auto cmd : {"points", "boxdim", "pressure-table", "language-count"}) {
        CHECK(run_captured(cmd, sc, opts).code == exit_success);
    }
    std::ifstream p(dir / "points.csv"), b(dir / "boxcounts.csv"), pr(dir / "pressure.csv"),
        l(dir / "language.csv");
    CHECK(read_point_cloud_csv(p).count() == 512);
    CHECK(read_box_counts_csv(b).size() == 11);
    CHECK(read_pressure_csv(pr).size() == 20 * 9);
    auto lang = read_language_csv(l);
    REQUIRE(lang.size() == 21);
    CHECK(lang[20].language == (Count(1) << 20));
    const std::string first = slurp(dir / "points.csv");
    run_captured("points", sc, opts);
    CHECK(slurp(dir / "points.csv") == first);
    CHECK(first.find('\r') == std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify on the Cantor scenario") {
    auto sc = parse_config_text(cantor_text, "cantor.cfg");
    auto checks = run_verification(sc);
    CHECK(checks.size() >= 10);
    for (const auto& c : checks) CHECK_MESSAGE((c.pass || c.skipped), c.name << ": " << c.note);
    auto r = run_captured("verify", sc, {.json_report = true});
    CHECK(r.code == exit_success);
    CHECK(r.out.find("\"tolerance\"") != std::string::npos);
}

TEST_CASE("verify reports failures with exit 4") {
    // two-point cloud cannot reach the Cantor dimension
    auto sc = parse_config_text(cantor_text, "cantor.cfg");
    sc.points.depth = 1;
    sc.boxdim.slack = 0.0;
    CHECK(run_captured("verify", sc).code == exit_verification);
}
