// measure.hpp — Shot-noise emulation of the optical estimation chain: noisy
// correlator estimates, noisy energy assembly, and optimization under noise.

#pragma once

#include <cstdint>

#include "vcmps/optimizer.hpp"

namespace vcmps {

// Detection layouts: photon counting (intensity), coincidence counting (pair
// correlations), and a variable-path interferometer (first-order coherence).
enum class DetectionScheme { Intensity, Hbt, Interferometer };

struct NoiseModel {
    long long shots = 1;      // number of detection samples behind each estimate
    std::uint64_t seed = 0;   // reproducibility; identical inputs+seed → identical outputs
    DetectionScheme scheme = DetectionScheme::Intensity;
};
void validate(const NoiseModel& nm);

struct Estimate {
    Complex mean;
    double std_error = 0.0;
    long long shots = 0;
};

enum class CorrelatorKind { Intensity, G1, G2 };
DetectionScheme scheme_for(CorrelatorKind kind);

// Deterministic sub-stream derivation (splitmix64); parallel estimates must
// use distinct streams.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

// Exact correlator plus a noise draw. Intensity and g2 carry Poisson-like
// σ = √(value·(1+value))/√shots on the real value; g1 carries a complex
// Gaussian with σ = √(g1(0))/√shots per quadrature. tau is ignored for
// the intensity. std_error reports the applied σ.
Estimate noisy_correlator(const CmpsRep& rep, CorrelatorKind kind, double tau,
                          const NoiseModel& nm);

// f(λ) assembled from four independent noisy correlator estimates (intensity,
// pair at zero, coherence at 0 and at eps); the kinetic term is the finite-ε
// second difference, so its noise is amplified by 2√2·σ_g1/ε². std_error is the
// quadrature sum of the propagated component noises.
Estimate noisy_energy(const CmpsRep& rep, const LiebLinigerParams& p, double eps,
                      const NoiseModel& nm);

// minimize with the exact objective replaced by noisy_energy (fresh seed
// stream per evaluation, deterministic under nm.seed); the stopping tolerance
// is inflated to max(tol, 3·std_error) and the trace records the noise per
// step. μ enters the classical postprocessing directly (no rescale detour).
// The returned breakdown is one further independent measurement at λ*.
OptResult noisy_minimize(const VariationalSpace& space, const Eigen::VectorXd& lambda0,
                         const LiebLinigerParams& p, const OptimizerConfig& cfg,
                         const NoiseModel& nm, double kinetic_eps = 0.5);

}  // namespace vcmps
