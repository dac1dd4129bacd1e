// cli.hpp — Command-line front end: configuration, orchestration, result emission

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcmps/measure.hpp"

namespace vcmps::cli {

struct SystemConfig {
    bool cavity_mode = true;  // cavity3 vs free_cmps
    JcParams jc;              // cavity3 parameters; doubles as λ0 = (g, Ω, log s)
    double s = 1.0;
    Eigen::Index free_dim = 1;     // free_cmps bond dimension
    std::uint64_t init_seed = 1;   // free_cmps λ0 draw
};

struct RunConfig {
    SystemConfig system;
    std::vector<double> v_list{1.0};
    double mu = 1.0;
    OptimizerConfig optimizer;
    bool warm_start = true;
    int restarts = 0;  // extra seeded starts around λ0; best result kept
    int jobs = 1;
    std::optional<NoiseModel> noise;
    double kinetic_eps = 0.5;
    std::vector<double> taus;  // correlation grid
    std::string out_dir = "out";
    std::string format = "csv";  // series format: csv | json
    double rate_scale = 1.0;     // physical κ the input rates were divided by
};

// "start:step:end", end inclusive up to rounding.
std::vector<double> parse_taus(const std::string& spec);

// Parses, validates (listing every violation), applies defaults, and converts
// rates to κ = 1 units, recording the conversion in rate_scale.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// The resolved, unit-normalized configuration; reloading it reproduces the run.
nlohmann::json resolved_config(const RunConfig& cfg);

// λ0 implied by the configuration (cavity3 fields or a seeded free draw).
Eigen::VectorXd initial_lambda(const RunConfig& cfg);
VariationalSpace variational_space(const RunConfig& cfg);

// Subcommands: steady, optimize, sweep, correlate, check-coop, noisy-optimize.
// Exit status 0 on success, 1 on usage/config errors, 2 on numerical failure.
int run(int argc, const char* const* argv);

}  // namespace vcmps::cli
