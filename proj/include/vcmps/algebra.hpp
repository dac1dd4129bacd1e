// algebra.hpp — Dense complex superoperator machinery: vectorization, Lindblad-form
// generators, steady states, spectral gaps, and exponential propagation.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "vcmps/errors.hpp"

namespace vcmps {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Vectorization. Column stacking throughout: vec(X)(i + j*d) = X(i, j), so that
// vec(A X B) = (Bᵀ ⊗ A) vec(X). This is the one place the convention lives;
// everything else goes through vec/unvec/kron.
// ---------------------------------------------------------------------------

CVector vec(const Matrix& x);
Matrix unvec(const CVector& v, Eigen::Index dim);
Matrix kron(const Matrix& a, const Matrix& b);

// max |M - M†| entry; 0 for exactly Hermitian input
double hermitian_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

// Lindblad-form map evaluated directly on an operator:
//   X ↦ Q X + X Q† + Σ_α R_α X R_α†
Matrix lindblad_action(const Matrix& q, const std::vector<Matrix>& channels, const Matrix& x);

// ---------------------------------------------------------------------------
// Superoperator: a linear map on dim×dim operators held as its dense
// dim²×dim² matrix in the column-stacking convention.
// ---------------------------------------------------------------------------

struct Superoperator {
    Eigen::Index dim = 0;
    Matrix mat;  // dim² × dim²

    Matrix apply(const Matrix& x) const;          // unvec(mat · vec x)
    Matrix apply_adjoint(const Matrix& x) const;  // unvec(mat† · vec x)
};

// L(ρ) = Qρ + ρQ† + Σ_α R_α ρ R_α†. Trace-preserving iff Q = -iH - ½ Σ R†R.
Superoperator build_liouvillian(const Matrix& q, const std::vector<Matrix>& channels);

// ---------------------------------------------------------------------------
// Steady state
// ---------------------------------------------------------------------------

struct Density {
    Matrix rho;
    Eigen::Index dim() const { return rho.rows(); }
};

// Throws NumericalHealthError unless rho is Hermitian (1e-12), unit trace
// (1e-12) and positive semidefinite down to min eigenvalue ≥ -1e-10.
void check_density(const Density& d, double herm_tol = 1e-12, double trace_tol = 1e-12,
                   double psd_tol = 1e-10);

struct SteadyStateOptions {
    double residual_tol = 1e-10;   // required ‖L(ρ)‖_F
    double rcond_min = 1e-12;      // bordered solve below this → eigenvector fallback
    double asymmetry_tol = 1e-10;  // allowed pre-symmetrization ‖ρ-ρ†‖
    double degenerate_tol = 1e-8;  // two singular values this close to zero → ambiguous
};

// Unique fixed point of a trace-preserving generator, solved from the bordered
// linear system (one row of the vectorized generator replaced by the trace
// constraint) with a smallest-eigenvalue fallback when that system is
// ill-conditioned. Throws DegenerateKernelError when the kernel is not
// one-dimensional and SolverError when the residual target is missed.
Density steady_state(const Superoperator& lv, const SteadyStateOptions& opts = {});

// ---------------------------------------------------------------------------
// Propagation
// ---------------------------------------------------------------------------

struct EvolveOptions {
    double rtol = 1e-9;  // relative tolerance per unit tau
    double atol = 1e-13;
    Eigen::Index adaptive_max_dim = 64;  // adaptive integration up to dim² = 4096
    Eigen::Index expm_max_dim = 32;      // dense scale-and-square up to dim² = 1024
};

// e^{L·tau}(x0) by adaptive explicit integration of the vectorized system.
Matrix evolve(const Superoperator& lv, const Matrix& x0, double tau,
              const EvolveOptions& opts = {});

// Same map through the dense scale-and-square matrix exponential; kept as an
// independent route so either implementation can check the other.
Matrix evolve_expm(const Superoperator& lv, const Matrix& x0, double tau,
                   const EvolveOptions& opts = {});

// min |Re λ| over the nonzero spectrum of L; the relaxation rate toward the
// steady state. Throws DegenerateKernelError when the whole spectrum sits
// within 1e-12 (scaled) of zero.
double spectral_gap(const Superoperator& lv);

}  // namespace vcmps
