#include "liqsim/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace liqsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError(line, "key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

}  // namespace

KeyValueFile KeyValueFile::parse_string(const std::string& text) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, "expected 'key = value', got '" + trim(raw) + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        if (key.find_first_of(" \t") != std::string::npos)
            throw ConfigError(line_no, "key '" + key + "' contains whitespace");
        if (kv.entries_.count(key))
            throw ConfigError(line_no, "duplicate key '" + key + "' (first at line " +
                                           std::to_string(kv.entries_[key].line) + ")");
        kv.entries_[key] = Entry{value, line_no};
    }
    return kv;
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

const KeyValueFile::Entry& KeyValueFile::lookup(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError(0, "missing required key '" + key + "'");
    return it->second;
}

bool KeyValueFile::has(const std::string& key) const { return entries_.count(key) > 0; }

int KeyValueFile::line_of(const std::string& key) const { return lookup(key).line; }

double KeyValueFile::get_double(const std::string& key) const {
    const Entry& e = lookup(key);
    return parse_double(e.value, key, e.line);
}

int KeyValueFile::get_int(const std::string& key) const {
    const Entry& e = lookup(key);
    const double v = parse_double(e.value, key, e.line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(e.line, "key '" + key + "': expected an integer, got '" + e.value + "'");
    return i;
}

std::uint64_t KeyValueFile::get_uint64(const std::string& key) const {
    const Entry& e = lookup(key);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(e.value.c_str(), &end, 10);
    if (end == e.value.c_str() || *end != '\0')
        throw ConfigError(e.line, "key '" + key + "': expected a non-negative integer, got '" +
                                      e.value + "'");
    return static_cast<std::uint64_t>(v);
}

std::string KeyValueFile::get_string(const std::string& key) const { return lookup(key).value; }

std::vector<double> KeyValueFile::get_double_list(const std::string& key) const {
    const Entry& e = lookup(key);
    std::vector<double> out;
    std::string token;
    std::istringstream in(e.value);
    while (std::getline(in, token, ',')) {
        token = trim(token);
        if (token.empty())
            throw ConfigError(e.line, "key '" + key + "': empty entry in list");
        out.push_back(parse_double(token, key, e.line));
    }
    if (out.empty()) throw ConfigError(e.line, "key '" + key + "': empty list");
    return out;
}

double KeyValueFile::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int KeyValueFile::get_int_or(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

void KeyValueFile::require_known_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [key, entry] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError(entry.line, "unknown key '" + key + "'");
    }
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    return from_kv(KeyValueFile::parse_file(path));
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueFile& kv) {
    kv.require_known_keys({"s0", "mu", "sigma", "horizon", "theta", "strike", "a", "phi0",
                           "lambda_sweep", "n_paths", "n_steps", "seed", "strategy",
                           "output_path"});
    ExperimentConfig cfg;
    cfg.problem.market.s0 = kv.get_double("s0");
    cfg.problem.market.mu = kv.get_double_or("mu", 0.0);
    cfg.problem.market.sigma = kv.get_double("sigma");
    cfg.problem.market.horizon = kv.get_double("horizon");
    cfg.problem.option.theta = kv.get_double("theta");
    cfg.problem.option.strike = kv.get_double("strike");
    cfg.problem.impact.a = kv.get_double("a");
    cfg.problem.phi0 = kv.get_double("phi0");
    cfg.lambda_sweep = kv.get_double_list("lambda_sweep");
    cfg.n_paths = kv.get_int("n_paths");
    cfg.n_steps = kv.get_int("n_steps");
    cfg.seed = kv.get_uint64("seed");
    cfg.output_path = kv.get_string("output_path");

    const std::string strat = kv.get_string("strategy");
    if (strat == "asymptotic")
        cfg.strategy = StrategyKind::Asymptotic;
    else if (strat == "benchmark_sinh")
        cfg.strategy = StrategyKind::BenchmarkSinh;
    else if (strat == "none")
        cfg.strategy = StrategyKind::None;
    else
        throw ConfigError(kv.line_of("strategy"),
                          "strategy must be one of asymptotic|benchmark_sinh|none");

    if (!(cfg.problem.market.sigma > 0.0))
        throw ConfigError(kv.line_of("sigma"), "sigma must be > 0");
    if (!(cfg.problem.market.horizon > 0.0))
        throw ConfigError(kv.line_of("horizon"), "horizon must be > 0");
    if (!(cfg.problem.impact.a > 0.0)) throw ConfigError(kv.line_of("a"), "a must be > 0");
    if (cfg.n_steps < 100) throw ConfigError(kv.line_of("n_steps"), "n_steps must be >= 100");
    if (cfg.n_paths < 2) throw ConfigError(kv.line_of("n_paths"), "n_paths must be >= 2");
    for (std::size_t i = 0; i < cfg.lambda_sweep.size(); ++i) {
        const double l = cfg.lambda_sweep[i];
        if (!(l > 0.0 && l < 1.0))
            throw ConfigError(kv.line_of("lambda_sweep"),
                              "lambda_sweep values must lie in (0, 1)");
        if (i > 0 && !(l < cfg.lambda_sweep[i - 1]))
            throw ConfigError(kv.line_of("lambda_sweep"),
                              "lambda_sweep must be strictly decreasing");
    }
    return cfg;
}

VarTableConfig VarTableConfig::from_file(const std::string& path) {
    return from_kv(KeyValueFile::parse_file(path));
}

VarTableConfig VarTableConfig::from_kv(const KeyValueFile& kv) {
    kv.require_known_keys({"sigma", "a", "lambda_values", "x_values", "phi_values",
                           "t_end_values", "n_grid", "output_path"});
    VarTableConfig cfg;
    cfg.sigma = kv.get_double("sigma");
    cfg.a = kv.get_double("a");
    cfg.lambda_values = kv.get_double_list("lambda_values");
    cfg.x_values = kv.get_double_list("x_values");
    cfg.phi_values = kv.get_double_list("phi_values");
    cfg.t_end_values = kv.get_double_list("t_end_values");
    cfg.n_grid = kv.get_int_or("n_grid", 2000);
    cfg.output_path = kv.get_string("output_path");

    if (!(cfg.sigma > 0.0)) throw ConfigError(kv.line_of("sigma"), "sigma must be > 0");
    if (!(cfg.a > 0.0)) throw ConfigError(kv.line_of("a"), "a must be > 0");
    if (cfg.n_grid < 100) throw ConfigError(kv.line_of("n_grid"), "n_grid must be >= 100");
    for (double l : cfg.lambda_values)
        if (!(l > 0.0 && l < 1.0))
            throw ConfigError(kv.line_of("lambda_values"), "lambda values must lie in (0, 1)");
    for (double t : cfg.t_end_values)
        if (!(t > 0.0))
            throw ConfigError(kv.line_of("t_end_values"), "t_end values must be > 0");
    return cfg;
}

}  // namespace liqsim
