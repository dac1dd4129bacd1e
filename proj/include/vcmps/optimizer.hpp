// optimizer.hpp — Finite-difference gradient descent over experimental or
// free-cMPS parameters, with sweep orchestration over interaction strengths.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vcmps/model.hpp"

namespace vcmps {

// Experimental space: κ, γ, n_max fixed, λ = (g, Ω, log s).
struct Cavity3Space {
    double kappa = 1.0;
    double gamma = 0.0;
    int n_max = 8;
};

// Free-cMPS space of bond dimension D:
//   λ = [K diagonal (D), (Re, Im) of K upper triangle (D(D-1)),
//        (Re, Im) of R row-major (2D²), log s]   — 3D² + 1 parameters.
struct FreeCmpsSpace {
    Eigen::Index dim = 1;
};

using VariationalSpace = std::variant<Cavity3Space, FreeCmpsSpace>;

Eigen::Index parameter_count(const VariationalSpace& space);
CmpsRep build_rep(const VariationalSpace& space, const Eigen::VectorXd& lambda);

Eigen::VectorXd pack_free(const FreeCmpsSpace& space, const FreeParams& p);
FreeParams unpack_free(const FreeCmpsSpace& space, const Eigen::VectorXd& lambda);

// Zero-pad a D-dimensional parameter point into a larger space, with a small
// seeded coupling into the new block. Exact zero padding leaves the enlarged
// generator with a decoupled (hence degenerate) sector, so the perturbation is
// what makes the warm start evaluable; it costs O(coupling²) in f.
Eigen::VectorXd embed_free(const FreeCmpsSpace& from, const Eigen::VectorXd& lambda,
                           const FreeCmpsSpace& to, double coupling = 1e-3,
                           std::uint64_t seed = 7);

// Seeded Gaussian starting point (entries ~ N(0, amplitude)) at the given s.
Eigen::VectorXd random_free_start(const FreeCmpsSpace& space, double scale, std::uint64_t seed,
                                  double amplitude = 0.5);

struct OptimizerConfig {
    double step = 1e-2;      // ε, the descent step
    double fd_delta = 1e-4;  // relative finite-difference offset
    double tol = 1e-9;       // stop when an accepted step improves f by less
    int max_iter = 5000;
    std::optional<Eigen::VectorXd> lower;  // closed per-parameter bounds
    std::optional<Eigen::VectorXd> upper;
    bool rescale_mu = true;  // μ ≠ 1 served through the μ = 1 problem + rescale
};
void validate(const OptimizerConfig& cfg, Eigen::Index n_params);

struct TraceEntry {
    int iteration;
    double f;
    bool accepted;
    double std_error = 0.0;  // reported measurement noise, 0 for exact objectives
};

struct OptResult {
    Eigen::VectorXd lambda_star;
    double f_star = 0.0;
    EnergyBreakdown breakdown{};
    std::vector<TraceEntry> trace;
    bool converged = false;
    std::string note;  // failure diagnostics on per-entry sweep errors
};

// Deterministic composition: build the rep, evaluate the energy functional.
// Numerical failures surface as EvaluationError carrying λ.
EnergyBreakdown evaluate(const VariationalSpace& space, const Eigen::VectorXd& lambda,
                         const LiebLinigerParams& p);

// Central differences with per-component offset fd_delta·max(|λᵢ|, 1).
Eigen::VectorXd grad_fd(const VariationalSpace& space, const Eigen::VectorXd& lambda,
                        const LiebLinigerParams& p, double fd_delta);

// Generic core shared by the exact and noisy paths (and the test hooks):
// the objective reports a value and its measurement noise (0 when exact).
struct ObjectiveValue {
    double value;
    double sigma = 0.0;
};
using Objective = std::function<ObjectiveValue(const Eigen::VectorXd&)>;

Eigen::VectorXd grad_fd_objective(const Objective& f, const Eigen::VectorXd& lambda,
                                  double fd_delta, const OptimizerConfig* cfg = nullptr);

// Plain gradient descent λ ← λ - ε∇f with one guard: a step that does not
// decrease f is rejected and ε halved (regrowing after accepted steps, capped
// at the configured ε). Stops when an accepted improvement falls below
// max(tol, 3·sigma), on max_iter, or on step underflow (converged = false).
OptResult minimize_objective(const Objective& f, Eigen::VectorXd lambda0,
                             const OptimizerConfig& cfg);

OptResult minimize(const VariationalSpace& space, const Eigen::VectorXd& lambda0,
                   const LiebLinigerParams& p, const OptimizerConfig& cfg);

struct SweepOptions {
    bool warm_start = true;  // seed each v from the previous optimum
    int jobs = 1;            // parallelism for cold starts
};

// One optimization per v, in input order; μ is shared. Per-entry failures are
// recorded in the result's note and the sweep continues.
std::vector<OptResult> sweep(const VariationalSpace& space, const std::vector<double>& v_list,
                             double mu, const Eigen::VectorXd& lambda0,
                             const OptimizerConfig& cfg, const SweepOptions& opts = {});

}  // namespace vcmps
