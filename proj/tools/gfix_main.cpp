#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gfix/errors.hpp"
#include "gfix/scenario.hpp"

namespace {

struct CliOptions {
    std::string config;
    std::string format = "structured";
    std::string out;
    gfix::RunOverrides overrides;
};

void add_common(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("config", opts.config,
                    "config file or built-in scenario (example-2.6, example-2.6-sum, "
                    "table-3pt, discrete-3pt)")
        ->required();
    cmd->add_option_function<double>(
        "--tol", [&opts](double v) { opts.overrides.tol = v; },
        "value/point tolerance (default 1e-9)");
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&opts](std::uint64_t v) { opts.overrides.seed = v; },
        "sampling seed (also GFIX_SEED)");
    cmd->add_option_function<int>(
        "--n-max", [&opts](int v) { opts.overrides.n_max = v; },
        "iteration budget (default 10000)");
    cmd->add_option_function<int>(
        "--starts", [&opts](int v) { opts.overrides.starts = v; },
        "number of seeded random starts for uniqueness evidence");
    cmd->add_flag_function(
        "--strict", [&opts](std::int64_t) { opts.overrides.strict = true; },
        "abort the solve on any hypothesis-check failure");
    cmd->add_option_function<double>(
        "--constant", [&opts](double v) { opts.overrides.constant = v; },
        "contraction constant h (max form) or kappa (sum form)");
    cmd->add_option("--format", opts.format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd->add_option("--out", opts.out, "write the structured report to a file");
}

int emit(const gfix::RunReport& report, const CliOptions& opts) {
    const std::string text =
        opts.format == "human" ? report.to_human() : report.to_string() + "\n";
    if (!opts.out.empty()) {
        std::ofstream out(opts.out);
        if (!out) {
            std::cerr << "cannot write " << opts.out << "\n";
            return 2;
        }
        out << report.to_string() << "\n";
        if (opts.format == "human") std::cout << text;
    } else {
        std::cout << text;
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gfix - G-metric fixed point toolkit"};
    app.require_subcommand(1);

    CliOptions check_opts, solve_opts, table_opts;
    CLI::App* check = app.add_subcommand("check", "run axiom/hypothesis checks");
    CLI::App* solve = app.add_subcommand("solve", "run the coupled fixed-point iteration");
    CLI::App* table = app.add_subcommand("table", "validate a finite table metric");
    add_common(check, check_opts);
    add_common(solve, solve_opts);
    add_common(table, table_opts);

    CLI11_PARSE(app, argc, argv);

    CliOptions* opts = nullptr;
    if (check->parsed()) opts = &check_opts;
    else if (solve->parsed()) opts = &solve_opts;
    else opts = &table_opts;

    if (!opts->overrides.seed) {
        if (const char* env = std::getenv("GFIX_SEED"))
            opts->overrides.seed = std::strtoull(env, nullptr, 10);
    }

    try {
        const gfix::Scenario scenario = gfix::Scenario::load(opts->config);
        gfix::RunReport report;
        if (check->parsed()) report = gfix::cmd_check(scenario, opts->overrides);
        else if (solve->parsed()) report = gfix::cmd_solve(scenario, opts->overrides);
        else report = gfix::cmd_table(scenario, opts->overrides);
        return emit(report, *opts);
    } catch (const gfix::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gfix::InvalidConstruction& e) {
        std::cerr << "invalid construction: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
