#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liqsim/mc.hpp"
#include "liqsim/model.hpp"

namespace liqsim {

// Config-file failure with the offending line number (0 when the problem is
// file-level, e.g. a missing key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Flat `key = value` file; '#' starts a comment, blank lines are ignored.
// Keys are single tokens; values run to end of line. Duplicate keys reject.
class KeyValueFile {
public:
    static KeyValueFile parse_file(const std::string& path);
    static KeyValueFile parse_string(const std::string& text);

    bool has(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    std::uint64_t get_uint64(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;  // comma-separated

    double get_double_or(const std::string& key, double fallback) const;
    int get_int_or(const std::string& key, int fallback) const;

    // Rejects any key not in `allowed`, reporting its line number.
    void require_known_keys(const std::vector<std::string>& allowed) const;

    int line_of(const std::string& key) const;

private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries_;
    const Entry& lookup(const std::string& key) const;
};

// Sweep/trajectory experiment description (see docs/CONFIG in README).
struct ExperimentConfig {
    LiquidationProblem problem;          // lambda taken per sweep point
    std::vector<double> lambda_sweep;    // in (0,1), strictly decreasing
    int n_paths = 100000;
    int n_steps = 1000;
    std::uint64_t seed = 1;
    StrategyKind strategy = StrategyKind::Asymptotic;
    std::string output_path = "sweep.csv";

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_kv(const KeyValueFile& kv);
};

// Lattice description for the variational closed-form-vs-oracle table.
struct VarTableConfig {
    double sigma = 1.0;
    double a = 1.0;
    std::vector<double> lambda_values;
    std::vector<double> x_values;
    std::vector<double> phi_values;
    std::vector<double> t_end_values;
    int n_grid = 2000;
    std::string output_path = "var_table.csv";

    static VarTableConfig from_file(const std::string& path);
    static VarTableConfig from_kv(const KeyValueFile& kv);
};

}  // namespace liqsim
