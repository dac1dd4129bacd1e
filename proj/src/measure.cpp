// measure.cpp — Shot-noise injection onto exact correlators

#include "vcmps/measure.hpp"

#include <cmath>
#include <random>

namespace vcmps {

void validate(const NoiseModel& nm) {
    if (nm.shots < 1) throw ConfigError({"NoiseModel: shots must be >= 1"});
}

DetectionScheme scheme_for(CorrelatorKind kind) {
    switch (kind) {
        case CorrelatorKind::Intensity: return DetectionScheme::Intensity;
        case CorrelatorKind::G1: return DetectionScheme::Interferometer;
        case CorrelatorKind::G2: return DetectionScheme::Hbt;
    }
    throw DimensionError("scheme_for: unknown correlator kind");
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

double counting_sigma(double value, long long shots) {
    // Poisson-like spread of a normalized counting estimate; exactly zero
    // signal produces no counts and no spread.
    return std::sqrt(std::max(value, 0.0) * (1.0 + std::max(value, 0.0)) /
                     double(shots));
}

}  // namespace

Estimate noisy_correlator(const CmpsRep& rep, CorrelatorKind kind, double tau,
                          const NoiseModel& nm) {
    validate(nm);
    if (tau < 0.0) throw DimensionError("noisy_correlator: tau must be nonnegative");

    std::mt19937_64 rng(split_seed(nm.seed, 0));
    std::normal_distribution<double> gauss(0.0, 1.0);

    Estimate est;
    est.shots = nm.shots;
    switch (kind) {
        case CorrelatorKind::Intensity: {
            const double value = observables(rep).density;
            est.std_error = counting_sigma(value, nm.shots);
            est.mean = value + est.std_error * gauss(rng);
            break;
        }
        case CorrelatorKind::G2: {
            const std::vector<double> taus = tau > 0.0 ? std::vector<double>{0.0, tau}
                                                       : std::vector<double>{0.0};
            const CorrelationSeries series = g2(rep, taus);
            const double value = series.values.back().real();
            est.std_error = counting_sigma(value, nm.shots);
            est.mean = value + est.std_error * gauss(rng);
            break;
        }
        case CorrelatorKind::G1: {
            const std::vector<double> taus = tau > 0.0 ? std::vector<double>{0.0, tau}
                                                       : std::vector<double>{0.0};
            const CorrelationSeries series = g1(rep, taus);
            const double at_zero = series.values.front().real();
            est.std_error = std::sqrt(std::max(at_zero, 0.0) / double(nm.shots));
            const double re = gauss(rng), im = gauss(rng);
            est.mean = series.values.back() + est.std_error * Complex(re, im);
            break;
        }
    }
    return est;
}

Estimate noisy_energy(const CmpsRep& rep, const LiebLinigerParams& p, double eps,
                      const NoiseModel& nm) {
    validate(p);
    validate(nm);
    if (!(eps > 0.0)) throw DimensionError("noisy_energy: eps must be positive");

    auto stream = [&](std::uint64_t i, DetectionScheme scheme) {
        return NoiseModel{nm.shots, split_seed(nm.seed, 101 + i), scheme};
    };
    const Estimate density =
        noisy_correlator(rep, CorrelatorKind::Intensity, 0.0, stream(0, DetectionScheme::Intensity));
    const Estimate pair =
        noisy_correlator(rep, CorrelatorKind::G2, 0.0, stream(1, DetectionScheme::Hbt));
    const Estimate coh_zero =
        noisy_correlator(rep, CorrelatorKind::G1, 0.0, stream(2, DetectionScheme::Interferometer));
    const Estimate coh_eps =
        noisy_correlator(rep, CorrelatorKind::G1, eps, stream(3, DetectionScheme::Interferometer));

    const double kinetic =
        2.0 * (coh_zero.mean.real() - coh_eps.mean.real()) / (eps * eps);
    const double kinetic_sigma =
        2.0 * std::sqrt(coh_zero.std_error * coh_zero.std_error +
                        coh_eps.std_error * coh_eps.std_error) /
        (eps * eps);

    Estimate est;
    est.shots = nm.shots;
    est.mean = kinetic + p.v * pair.mean.real() - p.mu * density.mean.real();
    est.std_error = std::sqrt(kinetic_sigma * kinetic_sigma +
                              p.v * p.v * pair.std_error * pair.std_error +
                              p.mu * p.mu * density.std_error * density.std_error);
    return est;
}

OptResult noisy_minimize(const VariationalSpace& space, const Eigen::VectorXd& lambda0,
                         const LiebLinigerParams& p, const OptimizerConfig& cfg,
                         const NoiseModel& nm, double kinetic_eps) {
    validate(p);
    validate(nm);
    if (lambda0.size() != parameter_count(space))
        throw DimensionError("noisy_minimize: parameter vector length mismatch");

    std::uint64_t counter = 0;
    Objective objective = [&](const Eigen::VectorXd& lambda) {
        NoiseModel draw{nm.shots, split_seed(nm.seed, ++counter), nm.scheme};
        CmpsRep rep;
        try {
            rep = build_rep(space, lambda);
        } catch (const std::exception& err) {
            throw EvaluationError(std::string("energy evaluation failed: ") + err.what(), lambda);
        }
        const Estimate est = noisy_energy(rep, p, kinetic_eps, draw);
        return ObjectiveValue{est.mean.real(), est.std_error};
    };

    OptResult res = minimize_objective(objective, lambda0, cfg);

    // Report the measured breakdown at the optimum (one further draw).
    NoiseModel final_draw{nm.shots, split_seed(nm.seed, ++counter), nm.scheme};
    const CmpsRep rep = build_rep(space, res.lambda_star);
    auto stream = [&](std::uint64_t i, DetectionScheme scheme) {
        return NoiseModel{final_draw.shots, split_seed(final_draw.seed, 101 + i), scheme};
    };
    const Estimate density = noisy_correlator(rep, CorrelatorKind::Intensity, 0.0,
                                              stream(0, DetectionScheme::Intensity));
    const Estimate pair =
        noisy_correlator(rep, CorrelatorKind::G2, 0.0, stream(1, DetectionScheme::Hbt));
    const Estimate coh_zero =
        noisy_correlator(rep, CorrelatorKind::G1, 0.0, stream(2, DetectionScheme::Interferometer));
    const Estimate coh_eps = noisy_correlator(rep, CorrelatorKind::G1, kinetic_eps,
                                              stream(3, DetectionScheme::Interferometer));
    res.breakdown.kinetic =
        2.0 * (coh_zero.mean.real() - coh_eps.mean.real()) / (kinetic_eps * kinetic_eps);
    res.breakdown.interaction = p.v * pair.mean.real();
    res.breakdown.potential = -p.mu * density.mean.real();
    res.breakdown.total = res.breakdown.kinetic + res.breakdown.interaction + res.breakdown.potential;
    return res;
}

}  // namespace vcmps
