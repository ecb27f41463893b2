// Command-line driver: Lambda sweeps against the vanishing-impact limit,
// the variational closed-form/oracle table, single-trajectory dumps, and
// the one-command invariant suite.
//
// Exit codes: 0 success, 1 validation/runtime failure, 2 config error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liqsim/config.hpp"
#include "liqsim/experiment.hpp"
#include "liqsim/validate.hpp"

namespace {

int run_sweep_cmd(const std::string& config_path) {
    const liqsim::ExperimentConfig cfg = liqsim::ExperimentConfig::from_file(config_path);
    const liqsim::SweepReport report = liqsim::run_sweep(cfg);
    liqsim::write_sweep_csv(report, cfg.output_path);
    std::cout << "limit_value " << report.limit_value << "\n";
    for (const auto& row : report.rows)
        std::cout << "lambda " << row.lambda << ": ce " << row.ce_estimate << " +- "
                  << row.stderr_proxy << ", gap " << row.gap << "\n";
    std::cout << "wrote " << cfg.output_path << "\n";
    return 0;
}

int run_var_table_cmd(const std::string& config_path) {
    const liqsim::VarTableConfig cfg = liqsim::VarTableConfig::from_file(config_path);
    const auto rows = liqsim::run_var_table(cfg);
    liqsim::write_var_table_csv(rows, cfg.output_path);
    std::cout << "wrote " << rows.size() << " rows to " << cfg.output_path << "\n";
    return 0;
}

int run_trajectory_cmd(const std::string& config_path, std::uint64_t path_index,
                       const std::string& output_override) {
    const liqsim::ExperimentConfig cfg = liqsim::ExperimentConfig::from_file(config_path);
    const std::string out = output_override.empty() ? cfg.output_path : output_override;
    liqsim::write_trajectory_csv(cfg, path_index, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_validate_cmd(const std::string& level) {
    const auto lvl = level == "full" ? liqsim::ValidateLevel::Full : liqsim::ValidateLevel::Fast;
    const liqsim::ValidateReport report = liqsim::run_validate(lvl);
    std::cout << liqsim::format_report(report);
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liqsim: optimal liquidation under linear price impact in the Bachelier model"};
    app.require_subcommand(1);

    std::string sweep_config;
    auto* sweep = app.add_subcommand("sweep", "run a Lambda sweep and write a CSV report");
    sweep->add_option("--config", sweep_config, "experiment config file")->required();

    std::string validate_level = "fast";
    auto* validate = app.add_subcommand("validate", "run the invariant suite");
    validate->add_option("--level", validate_level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));

    std::string var_config;
    auto* var_table = app.add_subcommand("var-table", "variational closed form vs oracle table");
    var_table->add_option("--config", var_config, "lattice config file")->required();

    std::string traj_config;
    std::string traj_output;
    std::uint64_t path_index = 0;
    auto* traj = app.add_subcommand("trajectory", "dump one strategy trajectory as CSV");
    traj->add_option("--config", traj_config, "experiment config file")->required();
    traj->add_option("--path-index", path_index, "path index to dump")->required();
    traj->add_option("--output", traj_output, "override the config's output_path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return run_sweep_cmd(sweep_config);
        if (validate->parsed()) return run_validate_cmd(validate_level);
        if (var_table->parsed()) return run_var_table_cmd(var_config);
        if (traj->parsed()) return run_trajectory_cmd(traj_config, path_index, traj_output);
    } catch (const liqsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
