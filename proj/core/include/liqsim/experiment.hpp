#pragma once

#include <string>
#include <vector>

#include "liqsim/config.hpp"

namespace liqsim {

// One row of the Lambda sweep. limit_value is the Lambda-independent
// scaling limit u(0, S0 - sigma sqrt(A) Phi0) + sigma sqrt(A) Phi0^2 / 2;
// gap is |ce_estimate - limit_value|.
struct SweepRow {
    double lambda = 0.0;
    double ce_estimate = 0.0;
    double stderr_proxy = 0.0;
    double limit_value = 0.0;
    double gap = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    double limit_value = 0.0;
};

struct VarTableRow {
    double lambda = 0.0;
    double x = 0.0;
    double phi = 0.0;
    double t_end = 0.0;
    double value_closed = 0.0;
    double value_oracle = 0.0;
    double gap = 0.0;  // limit gap of the closed form
    double gap_over_lambda = 0.0;
};

// Closed-form scaling limit for the given problem.
double scaling_limit_value(const LiquidationProblem& problem);

// CE at every Lambda of the sweep; Lambda points run sequentially, paths
// inside a point may run concurrently. Does not touch the filesystem.
SweepReport run_sweep(const ExperimentConfig& config, int n_threads = 0);

std::vector<VarTableRow> run_var_table(const VarTableConfig& config);

// CSV writers. Numbers print with %.17g so repeated runs are byte-identical.
void write_sweep_csv(const SweepReport& report, const std::string& path);
void write_var_table_csv(const std::vector<VarTableRow>& rows, const std::string& path);

std::string sweep_csv_text(const SweepReport& report);
std::string var_table_csv_text(const std::vector<VarTableRow>& rows);

// One-path trajectory dump with columns t,S,F,Phi,PhiRate,Upsilon; uses the
// first lambda_sweep entry and the configured strategy.
std::string trajectory_csv_text(const ExperimentConfig& config, std::uint64_t path_index);
void write_trajectory_csv(const ExperimentConfig& config, std::uint64_t path_index,
                          const std::string& path);

}  // namespace liqsim
