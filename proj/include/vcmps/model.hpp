// model.hpp — Lieb–Liniger energy functional, general two-body interaction
// energies, and the scaling transformation between chemical potentials.

#pragma once

#include <functional>

#include "vcmps/cmps.hpp"

namespace vcmps {

struct LiebLinigerParams {
    double v = 1.0;   // contact-interaction strength, v > 0
    double mu = 1.0;  // chemical potential
};
void validate(const LiebLinigerParams& p);

struct EnergyBreakdown {
    double kinetic;      // ⟨T⟩ = tr([Q,R]†[Q,R] ρss)
    double interaction;  // ⟨W⟩ = v·G₂(0)
    double potential;    // ⟨N⟩ = -μ·n
    double total;        // f = T + W + N
};

EnergyBreakdown energy_density(const CmpsRep& rep, const LiebLinigerParams& p);

// Two-body potential w(x) = delta_weight·δ(x) + smooth(x), truncated at cutoff.
struct Kernel {
    double delta_weight = 0.0;
    std::function<double(double)> smooth;  // may be empty (pure delta)
    double cutoff = 10.0;
};

// ⟨W⟩ for a general kernel: delta_weight·G₂(0) + 2∫₀^cutoff smooth(x)·G₂(x) dx,
// with G₂ from the pair correlator. Warns when cutoff is short against the
// correlation length; throws QuadratureError when the quadrature stalls.
double interaction_general(const CmpsRep& rep, const Kernel& k);

// R → √c·R (all channels), Q → c·Q, s unchanged. The stationary state is
// invariant; (n, G₂(0), T) pick up factors (c, c², c³).
CmpsRep rescale(const CmpsRep& rep, double c);

// Minimizing f(·; v, μ) for μ > 0 reduces to the canonical μ = 1 problem:
//   min f(·; v, μ) = c³ · min f(·; v/c, 1) with c = √μ,
// and the optimizing state is the μ = 1 optimizer rescaled by c (equivalently
// s → s/c). Validated against direct re-optimization in the test suite.
struct ScaledProblem {
    double v_base;  // v/c
    double c;       // √μ
};
ScaledProblem reduce_to_unit_mu(double v, double mu);

}  // namespace vcmps
