// cmps.hpp — Continuous matrix product state form of the stationary output field:
// the (Q, R, s) data, its stationary reduced state, field densities, and the
// first- and second-order Glauber correlators.

#pragma once

#include <vector>

#include "vcmps/algebra.hpp"
#include "vcmps/cavity.hpp"

namespace vcmps {

// The variational state. Q generates the auxiliary flow per unit of simulated
// space x = s·t; R carries the observed output channel. Stationarity demands
// Q + Q† + R†R + Σ R_u†R_u = 0, which every constructor here guarantees.
struct CmpsRep {
    Eigen::Index dim = 0;  // auxiliary (bond) dimension D
    Matrix q;
    Matrix r_obs;
    std::vector<Matrix> r_unobs;
    double scale = 1.0;  // s > 0
};

// Throws unless the stationarity identity holds to 1e-10 and scale > 0.
void validate(const CmpsRep& rep);

// Identify a cavity system's output with a cMPS: R = √(rate/s)·op channelwise,
// Q = -iH/s - ½ Σ R†R. Requires exactly one observed channel.
CmpsRep from_cavity(const CavitySystem& sys, double scale);

// Free parameterization: K Hermitian and R unconstrained, in the gauge
// Q = (-iK - ½R†R)/s, R_obs = R/√s, which is stationary by construction.
struct FreeParams {
    Eigen::Index dim = 0;
    Matrix k;  // Hermitian
    Matrix r;
    double scale = 1.0;
};

CmpsRep from_free(const FreeParams& p);

// Generator over all channels (observed and unobserved alike).
Superoperator liouvillian(const CmpsRep& rep);

// Stationary reduced state of the auxiliary system.
Density stationary(const CmpsRep& rep);

struct FieldObservables {
    double density;  // n     = tr(R†R ρss)
    double kinetic;  // T     = tr([Q,R]†[Q,R] ρss)
    double pair;     // G₂(0) = tr(R†² R² ρss)
};

// All three are real and nonnegative up to 1e-10 numerical slack; beyond that
// a NumericalHealthError is raised.
FieldObservables observables(const CmpsRep& rep);

enum class CorrelationKind { G1, G2 };

// taus are separations along the simulated field (the propagator parameter of
// the rep's generator; equal to time in 1/κ units when s = 1). Negative
// separations follow from g1(-τ) = conj g1(τ) at the caller.
struct CorrelationSeries {
    std::vector<double> taus;
    std::vector<Complex> values;
    CorrelationKind kind;
};

// g1(τ) = tr(R e^{Lτ}[ρss R†]): first-order coherence, g1(0) = n.
CorrelationSeries g1(const CmpsRep& rep, const std::vector<double>& taus,
                     const EvolveOptions& opts = {});

// g2(τ) = tr(R†R e^{Lτ}[R ρss R†]): pair correlation, g2(0) = G₂(0),
// g2(∞) = n² for a gapped generator.
CorrelationSeries g2(const CmpsRep& rep, const std::vector<double>& taus,
                     const EvolveOptions& opts = {});

// Finite-difference estimator of the kinetic density from two g1 points,
//   T ≈ 2(g1(0) - Re g1(ε)) / ε²,
// converging to observables().kinetic as ε → 0. Warns when ε is not small
// against the correlation scale (ε·gap > 0.1).
double kinetic_fd(const CmpsRep& rep, double eps, const EvolveOptions& opts = {});

}  // namespace vcmps
