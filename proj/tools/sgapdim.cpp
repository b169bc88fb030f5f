// sgapdim: dimension bounds and box-counting checks for S-gap subfractals.

#include "sgap/cli.hpp"
#include "sgap/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Dimension bounds for subfractals induced by S-gap shifts"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config;
    std::string out_dir;
    std::uint64_t seed = 0;
    sgap::RunOptions options;
    app.add_option("--config", config, "scenario file (key = value)")->required();
    auto* out_opt = app.add_option("--out", out_dir, "directory for CSV/JSON outputs");
    auto* seed_opt = app.add_option("--seed", seed, "override points.seed");
    app.add_flag("--bits", options.bits, "report entropy in bits");
    app.add_flag("--json-report", options.json_report, "machine-readable verify output");

    app.add_subcommand("bounds", "enclosures of h and H");
    app.add_subcommand("entropy", "entropy of the gap shift");
    app.add_subcommand("pressure-table", "finite-n pressure over the (n, t) grid as CSV");
    app.add_subcommand("language-count", "|L_n| and |G_n| table as CSV");
    app.add_subcommand("points", "subfractal point cloud as CSV");
    app.add_subcommand("boxdim", "box counts as CSV plus the regression slope");
    app.add_subcommand("verify", "check battery with pass/fail per item");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? sgap::exit_success : sgap::exit_usage;
    }
    if (*out_opt) options.out_dir = out_dir;
    if (*seed_opt) options.seed = seed;

    sgap::Scenario scenario;
    try {
        scenario = sgap::parse_config(config);
    } catch (const sgap::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return sgap::exit_config;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    return sgap::run(name, std::move(scenario), options, std::cout, std::cerr);
}
