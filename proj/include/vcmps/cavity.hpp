// cavity.hpp — Driven Jaynes–Cummings systems with decay channels, cooperativity
// diagnostics, and Fock-truncation convergence checks.

#pragma once

#include <string>
#include <vector>

#include "vcmps/algebra.hpp"

namespace vcmps {

// Atom operators in the |g⟩ = index 0, |e⟩ = index 1 basis.
Matrix sigma_plus();
Matrix sigma_minus();

// Truncated ladder: a(n-1, n) = √n for n = 1..nlevels-1.
Matrix annihilation(Eigen::Index nlevels);
Matrix number_operator(Eigen::Index nlevels);

struct JcParams {
    double g = 1.0;      // atom–cavity coupling, units of κ
    double omega = 0.5;  // laser drive, units of κ
    double kappa = 1.0;  // cavity decay rate; sets the time unit
    double gamma = 0.0;  // spontaneous-emission amplitude rate; population decays at 2γ
    int n_max = 8;       // Fock truncation, states |0⟩..|n_max⟩
};
void validate(const JcParams& p);

struct DecayChannel {
    double rate;  // jump operator is √rate · op
    Matrix op;
    bool observed;
    std::string label;
};

struct CavitySystem {
    Eigen::Index dim;
    Matrix hamiltonian;
    std::vector<DecayChannel> channels;
};

// H = g(σ⁺⊗a + σ⁻⊗a†) + Ω(σ⁺+σ⁻)⊗1 on qubit ⊗ Fock(n_max+1); channels are
// the observed cavity output {κ, 1⊗a} and, when γ > 0, unobserved {2γ, σ⁻⊗1}.
CavitySystem jaynes_cummings(const JcParams& p);

struct CoopReport {
    double cooperativity;   // C = g²/(κγ); +inf when γ = 0
    double feature_time;    // τ = κ/g²: time over which the output shows model features
    double coherence_time;  // 1/(2γ); +inf when γ = 0
    bool feasible;          // feature_time ≤ coherence_time
};

CoopReport cooperativity(double g, double kappa, double gamma);

enum class CavityObservable { Density, G2Zero, Energy };

// Smallest n_max whose chosen steady-state observable moves by less than tol
// (relative) when the truncation grows by two levels. Escalates to n_max = 32
// and throws TruncationError with the observed sequence beyond that.
int truncation_converged(const JcParams& p, CavityObservable observable, double tol);

}  // namespace vcmps
