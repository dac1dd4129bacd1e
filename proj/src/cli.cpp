// cli.cpp — Config parsing, subcommand orchestration, CSV/JSON emission

#include "vcmps/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "vcmps/version.hpp"

namespace vcmps::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> parse_taus(const std::string& spec) {
    double start = 0.0, step = 0.0, end = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> step >> c2 >> end) || c1 != ':' || c2 != ':')
        throw ConfigError({"taus: expected START:STEP:END, got '" + spec + "'"});
    if (!(step > 0.0) || end < start)
        throw ConfigError({"taus: need step > 0 and end >= start in '" + spec + "'"});
    std::vector<double> taus;
    for (int k = 0;; ++k) {
        const double t = start + k * step;
        if (t > end + 0.5 * step) break;
        taus.push_back(std::min(t, end));
    }
    return taus;
}

namespace {

// Pulls a typed value, recording a violation instead of throwing on bad type.
template <typename T>
T get_or(const json& j, const char* key, T fallback, std::vector<std::string>& violations,
         const char* section) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        violations.push_back(std::string(section) + "." + key + ": wrong type");
        return fallback;
    }
}

}  // namespace

RunConfig parse_config(const json& j) {
    std::vector<std::string> violations;
    RunConfig cfg;
    cfg.taus = parse_taus("0:0.25:10");

    static const std::vector<std::string> known{"system",  "model", "optimizer", "noise",
                                               "output",  "taus",  "version",   "rate_scale"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            violations.push_back("unknown top-level key '" + it.key() + "'");

    if (j.contains("system")) {
        const json& s = j.at("system");
        const std::string mode = get_or<std::string>(s, "mode", "cavity3", violations, "system");
        if (mode == "cavity3") {
            cfg.system.cavity_mode = true;
            cfg.system.jc.g = get_or(s, "g", cfg.system.jc.g, violations, "system");
            cfg.system.jc.omega = get_or(s, "omega", cfg.system.jc.omega, violations, "system");
            cfg.system.jc.kappa = get_or(s, "kappa", cfg.system.jc.kappa, violations, "system");
            cfg.system.jc.gamma = get_or(s, "gamma", cfg.system.jc.gamma, violations, "system");
            cfg.system.jc.n_max = get_or(s, "n_max", cfg.system.jc.n_max, violations, "system");
        } else if (mode == "free_cmps") {
            cfg.system.cavity_mode = false;
            cfg.system.free_dim =
                get_or<Eigen::Index>(s, "D", cfg.system.free_dim, violations, "system");
            cfg.system.init_seed = get_or<std::uint64_t>(s, "init_seed", cfg.system.init_seed,
                                                         violations, "system");
        } else {
            violations.push_back("system.mode: expected 'cavity3' or 'free_cmps'");
        }
        cfg.system.s = get_or(s, "s", cfg.system.s, violations, "system");
    }

    if (j.contains("model")) {
        const json& m = j.at("model");
        if (m.contains("v_list"))
            cfg.v_list = get_or(m, "v_list", cfg.v_list, violations, "model");
        else if (m.contains("v"))
            cfg.v_list = {get_or(m, "v", 1.0, violations, "model")};
        cfg.mu = get_or(m, "mu", cfg.mu, violations, "model");
    }

    if (j.contains("optimizer")) {
        const json& o = j.at("optimizer");
        cfg.optimizer.step = get_or(o, "step", cfg.optimizer.step, violations, "optimizer");
        cfg.optimizer.fd_delta =
            get_or(o, "fd_delta", cfg.optimizer.fd_delta, violations, "optimizer");
        cfg.optimizer.tol = get_or(o, "tol", cfg.optimizer.tol, violations, "optimizer");
        cfg.optimizer.max_iter =
            get_or(o, "max_iter", cfg.optimizer.max_iter, violations, "optimizer");
        cfg.optimizer.rescale_mu =
            get_or(o, "rescale_mu", cfg.optimizer.rescale_mu, violations, "optimizer");
        cfg.warm_start = get_or(o, "warm_start", cfg.warm_start, violations, "optimizer");
        cfg.restarts = get_or(o, "restarts", cfg.restarts, violations, "optimizer");
        cfg.jobs = get_or(o, "jobs", cfg.jobs, violations, "optimizer");
        if (o.contains("lower")) {
            const auto v = get_or<std::vector<double>>(o, "lower", {}, violations, "optimizer");
            cfg.optimizer.lower = Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
        }
        if (o.contains("upper")) {
            const auto v = get_or<std::vector<double>>(o, "upper", {}, violations, "optimizer");
            cfg.optimizer.upper = Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
        }
    }

    if (j.contains("noise")) {
        const json& n = j.at("noise");
        NoiseModel nm;
        nm.shots = get_or<long long>(n, "shots", 1000000, violations, "noise");
        nm.seed = get_or<std::uint64_t>(n, "seed", 0, violations, "noise");
        cfg.noise = nm;
        cfg.kinetic_eps = get_or(n, "kinetic_eps", cfg.kinetic_eps, violations, "noise");
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        cfg.out_dir = get_or<std::string>(o, "dir", cfg.out_dir, violations, "output");
        cfg.format = get_or<std::string>(o, "format", cfg.format, violations, "output");
    }

    if (j.contains("taus")) {
        try {
            cfg.taus = parse_taus(j.at("taus").get<std::string>());
        } catch (const ConfigError& err) {
            violations.insert(violations.end(), err.violations.begin(), err.violations.end());
        } catch (const json::exception&) {
            violations.push_back("taus: wrong type");
        }
    }

    // Invariant checks, collected rather than thrown one at a time.
    if (cfg.system.cavity_mode) {
        if (!(cfg.system.jc.kappa > 0.0)) violations.push_back("system.kappa must be positive");
        if (cfg.system.jc.gamma < 0.0) violations.push_back("system.gamma must be nonnegative");
        if (cfg.system.jc.n_max < 1) violations.push_back("system.n_max must be >= 1");
    } else if (cfg.system.free_dim < 1) {
        violations.push_back("system.D must be >= 1");
    }
    if (!(cfg.system.s > 0.0)) violations.push_back("system.s must be positive");
    if (cfg.v_list.empty()) violations.push_back("model.v_list must be nonempty");
    for (double v : cfg.v_list)
        if (!(v > 0.0))
            violations.push_back("model.v must be positive (v = " + std::to_string(v) +
                                 " leaves the functional unbounded below)");
    if (!std::isfinite(cfg.mu)) violations.push_back("model.mu must be finite");
    if (!(cfg.optimizer.step > 0.0)) violations.push_back("optimizer.step must be positive");
    if (!(cfg.optimizer.fd_delta > 0.0)) violations.push_back("optimizer.fd_delta must be positive");
    if (!(cfg.optimizer.tol > 0.0)) violations.push_back("optimizer.tol must be positive");
    if (cfg.optimizer.max_iter < 1) violations.push_back("optimizer.max_iter must be >= 1");
    if (cfg.restarts < 0) violations.push_back("optimizer.restarts must be nonnegative");
    if (cfg.jobs < 1) violations.push_back("optimizer.jobs must be >= 1");
    if (cfg.noise && cfg.noise->shots < 1) violations.push_back("noise.shots must be >= 1");
    if (!(cfg.kinetic_eps > 0.0)) violations.push_back("noise.kinetic_eps must be positive");
    if (cfg.format != "csv" && cfg.format != "json")
        violations.push_back("output.format must be 'csv' or 'json'");

    if (!violations.empty()) throw ConfigError(std::move(violations));

    // Internal unit system: κ defines the rate unit. Dividing every rate (and
    // s, which is a length per time) by κ leaves the physics unchanged and is
    // recorded so outputs can be mapped back.
    if (cfg.system.cavity_mode && cfg.system.jc.kappa != 1.0) {
        const double k = cfg.system.jc.kappa;
        cfg.rate_scale = k;
        cfg.system.jc.g /= k;
        cfg.system.jc.omega /= k;
        cfg.system.jc.gamma /= k;
        cfg.system.jc.kappa = 1.0;
        cfg.system.s /= k;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"config file not readable: " + path});
    json j;
    try {
        in >> j;
    } catch (const json::exception& err) {
        throw ConfigError({std::string("config is not valid JSON: ") + err.what()});
    }
    return parse_config(j);
}

json resolved_config(const RunConfig& cfg) {
    json j;
    if (cfg.system.cavity_mode) {
        j["system"] = {{"mode", "cavity3"},       {"g", cfg.system.jc.g},
                       {"omega", cfg.system.jc.omega}, {"kappa", cfg.system.jc.kappa},
                       {"gamma", cfg.system.jc.gamma}, {"n_max", cfg.system.jc.n_max},
                       {"s", cfg.system.s}};
    } else {
        j["system"] = {{"mode", "free_cmps"},
                       {"D", cfg.system.free_dim},
                       {"init_seed", cfg.system.init_seed},
                       {"s", cfg.system.s}};
    }
    j["model"] = {{"v_list", cfg.v_list}, {"mu", cfg.mu}};
    j["optimizer"] = {{"step", cfg.optimizer.step},
                      {"fd_delta", cfg.optimizer.fd_delta},
                      {"tol", cfg.optimizer.tol},
                      {"max_iter", cfg.optimizer.max_iter},
                      {"rescale_mu", cfg.optimizer.rescale_mu},
                      {"warm_start", cfg.warm_start},
                      {"restarts", cfg.restarts},
                      {"jobs", cfg.jobs}};
    if (cfg.optimizer.lower)
        j["optimizer"]["lower"] =
            std::vector<double>(cfg.optimizer.lower->begin(), cfg.optimizer.lower->end());
    if (cfg.optimizer.upper)
        j["optimizer"]["upper"] =
            std::vector<double>(cfg.optimizer.upper->begin(), cfg.optimizer.upper->end());
    if (cfg.noise)
        j["noise"] = {{"shots", cfg.noise->shots},
                      {"seed", cfg.noise->seed},
                      {"kinetic_eps", cfg.kinetic_eps}};
    j["output"] = {{"dir", cfg.out_dir}, {"format", cfg.format}};
    std::ostringstream taus;
    if (cfg.taus.size() >= 2) {
        taus << cfg.taus.front() << ":" << (cfg.taus[1] - cfg.taus[0]) << ":" << cfg.taus.back();
        j["taus"] = taus.str();
    }
    j["rate_scale"] = cfg.rate_scale;
    j["version"] = kVersion;
    return j;
}

VariationalSpace variational_space(const RunConfig& cfg) {
    if (cfg.system.cavity_mode)
        return Cavity3Space{cfg.system.jc.kappa, cfg.system.jc.gamma, cfg.system.jc.n_max};
    return FreeCmpsSpace{cfg.system.free_dim};
}

Eigen::VectorXd initial_lambda(const RunConfig& cfg) {
    if (cfg.system.cavity_mode) {
        Eigen::VectorXd lambda(3);
        lambda << cfg.system.jc.g, cfg.system.jc.omega, std::log(cfg.system.s);
        return lambda;
    }
    return random_free_start(FreeCmpsSpace{cfg.system.free_dim}, cfg.system.s,
                             cfg.system.init_seed);
}

namespace {

double nan_to_null_guard(double x) { return x; }

json sanitized(double x) {
    if (std::isfinite(nan_to_null_guard(x))) return x;
    return nullptr;
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError({"cannot write output file: " + path.string()});
    out << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

std::string format_value(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Series emission; `normalized` divides by the stationary density squared for
// pair correlators and by the density for first-order coherence magnitudes.
void write_series(const fs::path& path, const RunConfig& cfg, const CorrelationSeries& series,
                  double density) {
    const bool pair = series.kind == CorrelationKind::G2;
    const double denom = pair ? density * density : density;
    auto normalized = [&](Complex value) {
        if (denom <= 0.0) return 0.0;
        return pair ? value.real() / denom : std::abs(value) / denom;
    };
    if (cfg.format == "json") {
        json j;
        j["version"] = kVersion;
        j["config"] = resolved_config(cfg);
        j["kind"] = pair ? "g2" : "g1";
        j["density"] = density;
        json points = json::array();
        for (std::size_t i = 0; i < series.taus.size(); ++i)
            points.push_back({{"tau", series.taus[i]},
                              {"re", series.values[i].real()},
                              {"im", series.values[i].imag()},
                              {"normalized", normalized(series.values[i])}});
        j["points"] = points;
        write_json(path, j);
        return;
    }
    std::ostringstream os;
    os << "# vcmps " << kVersion << "\n";
    os << "# config: " << resolved_config(cfg).dump() << "\n";
    os << "tau,re,im,normalized\n";
    for (std::size_t i = 0; i < series.taus.size(); ++i) {
        os << format_value(series.taus[i]) << "," << format_value(series.values[i].real()) << ","
           << format_value(series.values[i].imag()) << ","
           << format_value(normalized(series.values[i])) << "\n";
    }
    write_text(path, os.str());
}

json result_entry(const RunConfig& cfg, double v, const OptResult& res) {
    json entry;
    entry["v"] = v;
    entry["f_star"] = sanitized(res.f_star);
    entry["breakdown"] = {{"T", sanitized(res.breakdown.kinetic)},
                          {"W", sanitized(res.breakdown.interaction)},
                          {"N", sanitized(res.breakdown.potential)}};
    entry["lambda_star"] = std::vector<double>(res.lambda_star.begin(), res.lambda_star.end());
    int accepted = 0;
    for (const auto& t : res.trace) accepted += t.accepted ? 1 : 0;
    entry["iterations"] = std::max(0, accepted - 1);  // initial evaluation excluded
    entry["converged"] = res.converged;
    if (!res.note.empty()) entry["note"] = res.note;

    if (std::isfinite(res.f_star)) {
        if (cfg.system.cavity_mode) {
            entry["params"] = {{"g", res.lambda_star(0)},
                               {"omega", res.lambda_star(1)},
                               {"s", std::exp(res.lambda_star(2))}};
        } else {
            entry["params"] = {{"D", cfg.system.free_dim},
                               {"s", std::exp(res.lambda_star(res.lambda_star.size() - 1))}};
        }
        try {
            const FieldObservables obs =
                observables(build_rep(variational_space(cfg), res.lambda_star));
            entry["g2_0_normalized"] =
                obs.density > 0.0 ? sanitized(obs.pair / (obs.density * obs.density))
                                  : json(nullptr);
        } catch (const std::exception&) {
            entry["g2_0_normalized"] = nullptr;
        }
    } else {
        entry["g2_0_normalized"] = nullptr;
    }
    return entry;
}

json summary_shell(const RunConfig& cfg) {
    json j;
    j["config"] = resolved_config(cfg);
    j["version"] = kVersion;
    j["results"] = json::array();
    return j;
}

OptResult minimize_with_restarts(const RunConfig& cfg, const VariationalSpace& space,
                                 const Eigen::VectorXd& lambda0, const LiebLinigerParams& p) {
    OptResult best = minimize(space, lambda0, p, cfg.optimizer);
    std::mt19937_64 rng(split_seed(cfg.system.init_seed, 17));
    std::normal_distribution<double> gauss(0.0, 0.5);
    for (int r = 0; r < cfg.restarts; ++r) {
        Eigen::VectorXd start = lambda0;
        for (Eigen::Index i = 0; i < start.size(); ++i) start(i) += gauss(rng);
        try {
            OptResult other = minimize(space, start, p, cfg.optimizer);
            if (other.f_star < best.f_star) best = std::move(other);
        } catch (const std::exception&) {
            // a failed restart is just a lost lottery ticket
        }
    }
    return best;
}

int run_steady(const RunConfig& cfg) {
    const CmpsRep rep = build_rep(variational_space(cfg), initial_lambda(cfg));
    const Superoperator lv = liouvillian(rep);
    const Density rho = steady_state(lv);
    const FieldObservables obs = observables(rep);

    json j = summary_shell(cfg);
    json r;
    r["trace"] = rho.rho.trace().real();
    r["residual"] = lv.apply(rho.rho).norm();
    r["hermiticity_defect"] = hermitian_defect(rho.rho);
    std::vector<double> populations;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) populations.push_back(rho.rho(i, i).real());
    r["populations"] = populations;
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.rho);
    r["min_eigenvalue"] = es.eigenvalues().minCoeff();
    r["density"] = obs.density;
    r["kinetic"] = obs.kinetic;
    r["g2_0"] = obs.pair;
    j["results"].push_back(r);
    write_json(fs::path(cfg.out_dir) / "steady.json", j);
    return 0;
}

int run_optimize(const RunConfig& cfg) {
    const VariationalSpace space = variational_space(cfg);
    const LiebLinigerParams p{cfg.v_list.front(), cfg.mu};
    const OptResult res = minimize_with_restarts(cfg, space, initial_lambda(cfg), p);
    json j = summary_shell(cfg);
    j["results"].push_back(result_entry(cfg, p.v, res));
    write_json(fs::path(cfg.out_dir) / "optimize.json", j);
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    const VariationalSpace space = variational_space(cfg);
    const std::vector<OptResult> results = sweep(space, cfg.v_list, cfg.mu, initial_lambda(cfg),
                                                 cfg.optimizer, {cfg.warm_start, cfg.jobs});
    json j = summary_shell(cfg);
    for (std::size_t i = 0; i < results.size(); ++i) {
        j["results"].push_back(result_entry(cfg, cfg.v_list[i], results[i]));
        if (!std::isfinite(results[i].f_star)) continue;
        const CmpsRep rep = build_rep(space, results[i].lambda_star);
        const CorrelationSeries series = g2(rep, cfg.taus);
        const double density = observables(rep).density;
        std::ostringstream name;
        name << "g2_v" << cfg.v_list[i] << (cfg.format == "json" ? ".json" : ".csv");
        write_series(fs::path(cfg.out_dir) / name.str(), cfg, series, density);
    }
    write_json(fs::path(cfg.out_dir) / "sweep_summary.json", j);
    return 0;
}

int run_correlate(const RunConfig& cfg, bool optimize_first, const std::string& kind) {
    const VariationalSpace space = variational_space(cfg);
    Eigen::VectorXd lambda = initial_lambda(cfg);
    if (optimize_first) {
        const LiebLinigerParams p{cfg.v_list.front(), cfg.mu};
        lambda = minimize_with_restarts(cfg, space, lambda, p).lambda_star;
    }
    const CmpsRep rep = build_rep(space, lambda);
    const double density = observables(rep).density;
    const CorrelationSeries series =
        kind == "g1" ? g1(rep, cfg.taus) : g2(rep, cfg.taus);
    const std::string name = "correlate_" + kind + (cfg.format == "json" ? ".json" : ".csv");
    write_series(fs::path(cfg.out_dir) / name, cfg, series, density);
    return 0;
}

int run_check_coop(const RunConfig& cfg) {
    if (!cfg.system.cavity_mode)
        throw ConfigError({"check-coop requires a cavity3 system"});
    const CoopReport rep =
        cooperativity(cfg.system.jc.g, cfg.system.jc.kappa, cfg.system.jc.gamma);
    json j = summary_shell(cfg);
    json r;
    r["cooperativity"] = std::isfinite(rep.cooperativity) ? json(rep.cooperativity) : json("inf");
    r["feature_time"] = std::isfinite(rep.feature_time) ? json(rep.feature_time) : json("inf");
    r["coherence_time"] =
        std::isfinite(rep.coherence_time) ? json(rep.coherence_time) : json("inf");
    r["feasible"] = rep.feasible;
    j["results"].push_back(r);
    write_json(fs::path(cfg.out_dir) / "coop.json", j);
    return 0;
}

int run_noisy_optimize(const RunConfig& cfg) {
    const VariationalSpace space = variational_space(cfg);
    const LiebLinigerParams p{cfg.v_list.front(), cfg.mu};
    const NoiseModel nm = cfg.noise.value_or(NoiseModel{1000000, 0, DetectionScheme::Intensity});
    const OptResult res =
        noisy_minimize(space, initial_lambda(cfg), p, cfg.optimizer, nm, cfg.kinetic_eps);
    json j = summary_shell(cfg);
    json entry = result_entry(cfg, p.v, res);
    json trace = json::array();
    for (const auto& t : res.trace)
        trace.push_back({{"iteration", t.iteration},
                         {"f", sanitized(t.f)},
                         {"accepted", t.accepted},
                         {"stderr", t.std_error}});
    entry["trace"] = trace;
    j["results"].push_back(entry);
    write_json(fs::path(cfg.out_dir) / "noisy_optimize.json", j);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"variational cMPS simulation of interacting 1D bosons from driven-cavity output"};
    app.require_subcommand(1);

    std::string config_path, taus_spec, out_dir, format, kind = "g2";
    double v_override = 0.0;
    bool has_v = false;
    int jobs = 0;
    long long seed = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--format", format, "series format: csv or json");
        sub->add_option("--seed", seed, "noise seed override");
        return sub;
    };

    auto* steady_cmd = add_common(app.add_subcommand("steady", "stationary-state diagnostics"));
    auto* optimize_cmd = add_common(app.add_subcommand("optimize", "minimize f at one v"));
    optimize_cmd->add_option("--v", v_override, "interaction strength")->each([&](std::string) {
        has_v = true;
    });
    auto* sweep_cmd = add_common(app.add_subcommand("sweep", "optimize across v_list"));
    sweep_cmd->add_option("--jobs", jobs, "parallel cold-start optimizations");
    sweep_cmd->add_option("--taus", taus_spec, "correlation grid START:STEP:END");
    auto* correlate_cmd = add_common(app.add_subcommand("correlate", "emit correlation series"));
    correlate_cmd->add_option("--v", v_override, "optimize at this v first")->each(
        [&](std::string) { has_v = true; });
    correlate_cmd->add_option("--taus", taus_spec, "correlation grid START:STEP:END");
    correlate_cmd->add_option("--kind", kind, "g1 or g2")
        ->check(CLI::IsMember({"g1", "g2"}));
    auto* coop_cmd = add_common(app.add_subcommand("check-coop", "cooperativity report"));
    auto* noisy_cmd =
        add_common(app.add_subcommand("noisy-optimize", "minimize under measurement noise"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err);  // CLI11 prints usage; nonzero on errors
    }

    try {
        RunConfig cfg = config_path.empty() ? parse_config(json::object()) : load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) {
            if (format != "csv" && format != "json")
                throw ConfigError({"--format must be 'csv' or 'json'"});
            cfg.format = format;
        }
        if (!taus_spec.empty()) cfg.taus = parse_taus(taus_spec);
        if (has_v) {
            if (!(v_override > 0.0)) throw ConfigError({"--v must be positive"});
            cfg.v_list = {v_override};
        }
        if (jobs > 0) cfg.jobs = jobs;
        if (seed >= 0) {
            NoiseModel nm = cfg.noise.value_or(NoiseModel{1000000, 0, DetectionScheme::Intensity});
            nm.seed = std::uint64_t(seed);
            cfg.noise = nm;
        }

        if (steady_cmd->parsed()) return run_steady(cfg);
        if (optimize_cmd->parsed()) return run_optimize(cfg);
        if (sweep_cmd->parsed()) return run_sweep(cfg);
        if (correlate_cmd->parsed()) return run_correlate(cfg, has_v, kind);
        if (coop_cmd->parsed()) return run_check_coop(cfg);
        if (noisy_cmd->parsed()) return run_noisy_optimize(cfg);
        return 1;
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 2;
    }
}

}  // namespace vcmps::cli
