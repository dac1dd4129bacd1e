// optimizer.cpp — Parameter packing, descent loop, and sweep orchestration

#include "vcmps/optimizer.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <sstream>

namespace vcmps {

namespace {

Eigen::VectorXd clip_to_bounds(Eigen::VectorXd lambda, const OptimizerConfig& cfg) {
    if (cfg.lower)
        for (Eigen::Index i = 0; i < lambda.size(); ++i)
            lambda(i) = std::max(lambda(i), (*cfg.lower)(i));
    if (cfg.upper)
        for (Eigen::Index i = 0; i < lambda.size(); ++i)
            lambda(i) = std::min(lambda(i), (*cfg.upper)(i));
    return lambda;
}

}  // namespace

Eigen::Index parameter_count(const VariationalSpace& space) {
    if (std::holds_alternative<Cavity3Space>(space)) return 3;
    const Eigen::Index d = std::get<FreeCmpsSpace>(space).dim;
    return 3 * d * d + 1;
}

Eigen::VectorXd pack_free(const FreeCmpsSpace& space, const FreeParams& p) {
    const Eigen::Index d = space.dim;
    if (p.dim != d) throw DimensionError("pack_free: dimension mismatch");
    Eigen::VectorXd lambda(3 * d * d + 1);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < d; ++i) lambda(k++) = p.k(i, i).real();
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = i + 1; j < d; ++j) {
            lambda(k++) = p.k(i, j).real();
            lambda(k++) = p.k(i, j).imag();
        }
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            lambda(k++) = p.r(i, j).real();
            lambda(k++) = p.r(i, j).imag();
        }
    lambda(k++) = std::log(p.scale);
    return lambda;
}

FreeParams unpack_free(const FreeCmpsSpace& space, const Eigen::VectorXd& lambda) {
    const Eigen::Index d = space.dim;
    if (lambda.size() != 3 * d * d + 1)
        throw DimensionError("unpack_free: expected 3D^2+1 parameters");
    FreeParams p;
    p.dim = d;
    p.k = Matrix::Zero(d, d);
    p.r = Matrix::Zero(d, d);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < d; ++i) p.k(i, i) = lambda(k++);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double re = lambda(k++);
            const double im = lambda(k++);
            p.k(i, j) = Complex(re, im);
            p.k(j, i) = Complex(re, -im);
        }
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const double re = lambda(k++);
            const double im = lambda(k++);
            p.r(i, j) = Complex(re, im);
        }
    p.scale = std::exp(lambda(k++));
    return p;
}

CmpsRep build_rep(const VariationalSpace& space, const Eigen::VectorXd& lambda) {
    if (lambda.size() != parameter_count(space))
        throw DimensionError("build_rep: parameter vector length mismatch");
    if (const auto* cav = std::get_if<Cavity3Space>(&space)) {
        JcParams p;
        p.g = lambda(0);
        p.omega = lambda(1);
        p.kappa = cav->kappa;
        p.gamma = cav->gamma;
        p.n_max = cav->n_max;
        return from_cavity(jaynes_cummings(p), std::exp(lambda(2)));
    }
    return from_free(unpack_free(std::get<FreeCmpsSpace>(space), lambda));
}

Eigen::VectorXd embed_free(const FreeCmpsSpace& from, const Eigen::VectorXd& lambda,
                           const FreeCmpsSpace& to, double coupling, std::uint64_t seed) {
    if (to.dim < from.dim) throw DimensionError("embed_free: target dimension smaller than source");
    const FreeParams small = unpack_free(from, lambda);
    FreeParams big;
    big.dim = to.dim;
    big.scale = small.scale;
    big.k = Matrix::Zero(to.dim, to.dim);
    big.r = Matrix::Zero(to.dim, to.dim);
    big.k.topLeftCorner(from.dim, from.dim) = small.k;
    big.r.topLeftCorner(from.dim, from.dim) = small.r;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index i = 0; i < to.dim; ++i)
        for (Eigen::Index j = 0; j < to.dim; ++j) {
            if (i < from.dim && j < from.dim) continue;
            big.r(i, j) += coupling * Complex(gauss(rng), gauss(rng));
            if (i == j)
                big.k(i, i) += coupling * gauss(rng);
            else if (i < j) {
                const Complex z = coupling * Complex(gauss(rng), gauss(rng));
                big.k(i, j) += z;
                big.k(j, i) += std::conj(z);
            }
        }
    return pack_free(to, big);
}

Eigen::VectorXd random_free_start(const FreeCmpsSpace& space, double scale, std::uint64_t seed,
                                  double amplitude) {
    if (!(scale > 0.0)) throw DimensionError("random_free_start: scale must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, amplitude);
    const Eigen::Index d = space.dim;
    FreeParams p;
    p.dim = d;
    p.scale = scale;
    p.k = Matrix::Zero(d, d);
    p.r = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        p.k(i, i) = gauss(rng);
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const Complex z(gauss(rng), gauss(rng));
            p.k(i, j) = z;
            p.k(j, i) = std::conj(z);
        }
    }
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) p.r(i, j) = Complex(gauss(rng), gauss(rng));
    return pack_free(space, p);
}

void validate(const OptimizerConfig& cfg, Eigen::Index n_params) {
    std::vector<std::string> violations;
    if (!(cfg.step > 0.0)) violations.push_back("OptimizerConfig: step must be positive");
    if (!(cfg.fd_delta > 0.0)) violations.push_back("OptimizerConfig: fd_delta must be positive");
    if (!(cfg.tol > 0.0)) violations.push_back("OptimizerConfig: tol must be positive");
    if (cfg.max_iter < 1) violations.push_back("OptimizerConfig: max_iter must be >= 1");
    if (cfg.lower && cfg.lower->size() != n_params)
        violations.push_back("OptimizerConfig: lower bound length mismatch");
    if (cfg.upper && cfg.upper->size() != n_params)
        violations.push_back("OptimizerConfig: upper bound length mismatch");
    if (cfg.lower && cfg.upper)
        for (Eigen::Index i = 0; i < cfg.lower->size() && i < cfg.upper->size(); ++i)
            if ((*cfg.lower)(i) > (*cfg.upper)(i))
                violations.push_back("OptimizerConfig: lower bound above upper bound at component " +
                                     std::to_string(i));
    if (!violations.empty()) throw ConfigError(std::move(violations));
}

EnergyBreakdown evaluate(const VariationalSpace& space, const Eigen::VectorXd& lambda,
                         const LiebLinigerParams& p) {
    validate(p);
    try {
        return energy_density(build_rep(space, lambda), p);
    } catch (const EvaluationError&) {
        throw;
    } catch (const std::exception& err) {
        throw EvaluationError(std::string("energy evaluation failed: ") + err.what(), lambda);
    }
}

Eigen::VectorXd grad_fd_objective(const Objective& f, const Eigen::VectorXd& lambda,
                                  double fd_delta, const OptimizerConfig* cfg) {
    if (!(fd_delta > 0.0)) throw DimensionError("grad_fd: fd_delta must be positive");
    Eigen::VectorXd grad(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        const double h = fd_delta * std::max(std::abs(lambda(i)), 1.0);
        double above = lambda(i) + h, below = lambda(i) - h;
        if (cfg && cfg->upper) above = std::min(above, (*cfg->upper)(i));
        if (cfg && cfg->lower) below = std::max(below, (*cfg->lower)(i));
        const double span = above - below;
        if (span <= 0.0) {  // parameter pinned by its bounds
            grad(i) = 0.0;
            continue;
        }
        Eigen::VectorXd probe = lambda;
        try {
            probe(i) = above;
            const double f_above = f(probe).value;
            probe(i) = below;
            const double f_below = f(probe).value;
            grad(i) = (f_above - f_below) / span;
        } catch (const std::exception& err) {
            throw GradientError("finite-difference probe failed at component " +
                                    std::to_string(i) + ": " + err.what(),
                                int(i));
        }
    }
    return grad;
}

Eigen::VectorXd grad_fd(const VariationalSpace& space, const Eigen::VectorXd& lambda,
                        const LiebLinigerParams& p, double fd_delta) {
    Objective f = [&](const Eigen::VectorXd& x) {
        return ObjectiveValue{evaluate(space, x, p).total};
    };
    return grad_fd_objective(f, lambda, fd_delta);
}

OptResult minimize_objective(const Objective& f, Eigen::VectorXd lambda0,
                             const OptimizerConfig& cfg) {
    validate(cfg, lambda0.size());
    constexpr double step_min = 1e-12;

    OptResult res;
    Eigen::VectorXd lambda = clip_to_bounds(std::move(lambda0), cfg);
    ObjectiveValue current = f(lambda);
    res.trace.push_back({0, current.value, true, current.sigma});

    double step = cfg.step;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        const Eigen::VectorXd grad = grad_fd_objective(f, lambda, cfg.fd_delta, &cfg);

        bool accepted = false;
        double improvement = 0.0;
        while (step >= step_min) {
            const Eigen::VectorXd candidate = clip_to_bounds(lambda - step * grad, cfg);
            bool usable = true;
            ObjectiveValue trial{std::numeric_limits<double>::quiet_NaN(), 0.0};
            try {
                trial = f(candidate);
            } catch (const EvaluationError&) {
                usable = false;  // rejected step; retreat and retry
            }
            if (usable && trial.value <= current.value) {
                improvement = current.value - trial.value;
                lambda = candidate;
                current = trial;
                res.trace.push_back({iter, current.value, true, current.sigma});
                step = std::min(step * 1.5, cfg.step);
                accepted = true;
                break;
            }
            if (usable) res.trace.push_back({iter, trial.value, false, trial.sigma});
            step /= 2.0;
        }

        if (!accepted) {  // step-size underflow: stagnation
            res.converged = false;
            res.lambda_star = lambda;
            res.f_star = current.value;
            res.note = "stagnated: every step rejected down to the minimum step size";
            return res;
        }
        if (improvement < std::max(cfg.tol, 3.0 * current.sigma)) {
            res.converged = true;
            break;
        }
    }

    res.lambda_star = lambda;
    res.f_star = current.value;
    return res;
}

namespace {

// Scale an optimum of the μ = 1 base problem back to the requested μ = c².
void restore_from_base(OptResult& res, double c) {
    const double c3 = c * c * c;
    res.f_star *= c3;
    res.breakdown.kinetic *= c3;
    res.breakdown.interaction *= c3;
    res.breakdown.potential *= c3;
    res.breakdown.total *= c3;
    for (auto& entry : res.trace) {
        entry.f *= c3;
        entry.std_error *= c3;
    }
    res.lambda_star(res.lambda_star.size() - 1) -= std::log(c);  // s → s/c
}

}  // namespace

OptResult minimize(const VariationalSpace& space, const Eigen::VectorXd& lambda0,
                   const LiebLinigerParams& p, const OptimizerConfig& cfg) {
    validate(p);
    if (lambda0.size() != parameter_count(space))
        throw DimensionError("minimize: parameter vector length mismatch");

    const bool via_rescale = cfg.rescale_mu && p.mu > 0.0 && p.mu != 1.0;
    LiebLinigerParams effective = p;
    Eigen::VectorXd start = lambda0;
    double c = 1.0;
    if (via_rescale) {
        // Both spaces place log s last, and s → s/c realizes the rescale map,
        // so the μ = 1 problem is entered by shifting log s the other way.
        const ScaledProblem sp = reduce_to_unit_mu(p.v, p.mu);
        effective = LiebLinigerParams{sp.v_base, 1.0};
        c = sp.c;
        start(start.size() - 1) += std::log(c);
    }

    Objective objective = [&space, effective](const Eigen::VectorXd& x) {
        return ObjectiveValue{evaluate(space, x, effective).total};
    };
    OptResult res = minimize_objective(objective, start, cfg);
    res.breakdown = evaluate(space, res.lambda_star, effective);
    if (via_rescale) restore_from_base(res, c);
    return res;
}

std::vector<OptResult> sweep(const VariationalSpace& space, const std::vector<double>& v_list,
                             double mu, const Eigen::VectorXd& lambda0,
                             const OptimizerConfig& cfg, const SweepOptions& opts) {
    if (v_list.empty()) throw DimensionError("sweep: v_list must be nonempty");

    auto run_one = [&](double v, const Eigen::VectorXd& start) {
        try {
            return minimize(space, start, LiebLinigerParams{v, mu}, cfg);
        } catch (const std::exception& err) {
            OptResult failed;
            failed.lambda_star = start;
            failed.f_star = std::numeric_limits<double>::quiet_NaN();
            failed.converged = false;
            failed.note = std::string("sweep entry failed: ") + err.what();
            return failed;
        }
    };

    std::vector<OptResult> results;
    results.reserve(v_list.size());

    if (opts.warm_start) {
        Eigen::VectorXd start = lambda0;
        for (double v : v_list) {
            results.push_back(run_one(v, start));
            if (results.back().converged) start = results.back().lambda_star;
        }
        return results;
    }

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (double v : v_list) results.push_back(run_one(v, lambda0));
        return results;
    }
    results.resize(v_list.size());
    std::size_t next = 0;
    while (next < v_list.size()) {
        const std::size_t batch = std::min<std::size_t>(jobs, v_list.size() - next);
        std::vector<std::future<OptResult>> futures;
        for (std::size_t k = 0; k < batch; ++k)
            futures.push_back(std::async(std::launch::async, run_one, v_list[next + k], lambda0));
        for (std::size_t k = 0; k < batch; ++k) results[next + k] = futures[k].get();
        next += batch;
    }
    return results;
}

}  // namespace vcmps
