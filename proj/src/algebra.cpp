// algebra.cpp — Superoperator assembly, steady-state solving, propagation

#include "vcmps/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>

// Boost's generic Eigen adapter deduces the scalar type for norm_inf, which is
// complex here; the error checker needs a real norm.
namespace boost::numeric::odeint {
template <>
struct vector_space_norm_inf<Eigen::VectorXcd> {
    typedef double result_type;
    double operator()(const Eigen::VectorXcd& v) const { return v.cwiseAbs().maxCoeff(); }
};
}  // namespace boost::numeric::odeint

namespace vcmps {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionError(std::string(what) + ": matrix must be square with dim >= 1");
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

CVector vec(const Matrix& x) {
    require_square(x, "vec");
    return Eigen::Map<const CVector>(x.data(), x.size());
}

Matrix unvec(const CVector& v, Eigen::Index dim) {
    if (v.size() != dim * dim) throw DimensionError("unvec: length is not dim^2");
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

double hermitian_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && hermitian_defect(m) <= tol;
}

Matrix lindblad_action(const Matrix& q, const std::vector<Matrix>& channels, const Matrix& x) {
    require_square(q, "lindblad_action");
    require_same_dim(q, x, "lindblad_action");
    Matrix out = q * x + x * q.adjoint();
    for (const auto& r : channels) {
        require_same_dim(q, r, "lindblad_action");
        out.noalias() += r * x * r.adjoint();
    }
    return out;
}

Matrix Superoperator::apply(const Matrix& x) const {
    if (x.rows() != dim || x.cols() != dim) throw DimensionError("Superoperator::apply: dimension mismatch");
    return unvec(mat * vec(x), dim);
}

Matrix Superoperator::apply_adjoint(const Matrix& x) const {
    if (x.rows() != dim || x.cols() != dim)
        throw DimensionError("Superoperator::apply_adjoint: dimension mismatch");
    return unvec(mat.adjoint() * vec(x), dim);
}

Superoperator build_liouvillian(const Matrix& q, const std::vector<Matrix>& channels) {
    require_square(q, "build_liouvillian");
    const Eigen::Index d = q.rows();
    const Matrix id = Matrix::Identity(d, d);
    // vec(QX) = (I ⊗ Q) vec X;  vec(XQ†) = (conj Q ⊗ I) vec X;
    // vec(R X R†) = (conj R ⊗ R) vec X.
    Matrix m = kron(id, q) + kron(q.conjugate(), id);
    for (const auto& r : channels) {
        require_same_dim(q, r, "build_liouvillian");
        m.noalias() += kron(r.conjugate(), r);
    }
    return Superoperator{d, std::move(m)};
}

void check_density(const Density& d, double herm_tol, double trace_tol, double psd_tol) {
    require_square(d.rho, "check_density");
    const double asym = hermitian_defect(d.rho);
    if (asym > herm_tol)
        throw NumericalHealthError("density not Hermitian", asym);
    const double trace_err = std::abs(d.rho.trace() - Complex(1.0));
    if (trace_err > trace_tol)
        throw NumericalHealthError("density trace differs from one", trace_err);
    Eigen::SelfAdjointEigenSolver<Matrix> es((d.rho + d.rho.adjoint()) / 2.0);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -psd_tol)
        throw NumericalHealthError("density has a negative eigenvalue", min_eig);
}

namespace {

Density finalize_steady_state(const Superoperator& lv, Matrix rho, const SteadyStateOptions& opts) {
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-14)
        throw SolverError("steady state candidate has (near) zero trace", std::abs(tr));
    rho /= tr;
    const double asym = hermitian_defect(rho);
    if (asym > opts.asymmetry_tol)
        throw SolverError("steady state asymmetry above tolerance before symmetrization", asym);
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    const double residual = lv.apply(rho).norm();
    if (!(residual <= opts.residual_tol))
        throw SolverError("steady state residual above tolerance", residual);
    Density d{std::move(rho)};
    check_density(d);
    return d;
}

// Smallest-|eigenvalue| eigenvector of the vectorized generator; also the
// place where kernel degeneracy is detected.
Density steady_state_eigen(const Superoperator& lv, const SteadyStateOptions& opts) {
    Eigen::ComplexEigenSolver<Matrix> es(lv.mat, true);
    if (es.info() != Eigen::Success)
        throw SolverError("eigendecomposition of the generator failed", std::nan(""));
    const auto& vals = es.eigenvalues();
    Eigen::Index i_min = 0, i_second = -1;
    for (Eigen::Index i = 1; i < vals.size(); ++i)
        if (std::abs(vals(i)) < std::abs(vals(i_min))) i_min = i;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (i == i_min) continue;
        if (i_second < 0 || std::abs(vals(i)) < std::abs(vals(i_second))) i_second = i;
    }
    if (i_second >= 0) {
        const double lo = std::abs(vals(i_min));
        const double next = std::abs(vals(i_second));
        if (next <= opts.degenerate_tol && next - lo <= opts.degenerate_tol) {
            auto normalize = [&](Eigen::Index idx) {
                Matrix cand = unvec(es.eigenvectors().col(idx), lv.dim);
                const Complex tr = cand.trace();
                if (std::abs(tr) > 1e-10) cand /= tr;
                return cand;
            };
            std::ostringstream os;
            os << "degenerate kernel: two near-zero eigenvalues " << lo << " and " << next;
            throw DegenerateKernelError(os.str(), normalize(i_min), normalize(i_second));
        }
    }
    return finalize_steady_state(lv, unvec(es.eigenvectors().col(i_min), lv.dim), opts);
}

}  // namespace

Density steady_state(const Superoperator& lv, const SteadyStateOptions& opts) {
    const Eigen::Index d = lv.dim;
    if (d < 1 || lv.mat.rows() != d * d) throw DimensionError("steady_state: malformed superoperator");

    // Bordered system: the row of L acting on entry (0,0) is replaced by the
    // trace constraint. For a trace-preserving L the diagonal rows are linearly
    // dependent, so dropping one loses nothing.
    Matrix a = lv.mat;
    CVector b = CVector::Zero(d * d);
    for (Eigen::Index j = 0; j < d * d; ++j) a(0, j) = Complex(0.0);
    for (Eigen::Index i = 0; i < d; ++i) a(0, i + i * d) = Complex(1.0);
    b(0) = Complex(1.0);

    Eigen::PartialPivLU<Matrix> lu(a);
    if (lu.rcond() < opts.rcond_min) return steady_state_eigen(lv, opts);

    try {
        return finalize_steady_state(lv, unvec(lu.solve(b), d), opts);
    } catch (const SolverError&) {
        // Direct solve missed the target (rank issues the rcond estimate did
        // not flag); the eigenvector route decides between failure and
        // genuine degeneracy.
        return steady_state_eigen(lv, opts);
    }
}

namespace {

namespace ode = boost::numeric::odeint;

CVector integrate_vectorized(const Matrix& gen, CVector y, double tau, const EvolveOptions& opts) {
    const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
    using stepper_t =
        ode::runge_kutta_dopri5<CVector, double, CVector, double, ode::vector_space_algebra>;
    auto ctrl = ode::make_controlled(opts.atol * scale, opts.rtol, stepper_t());
    auto rhs = [&gen](const CVector& x, CVector& dxdt, double) { dxdt.noalias() = gen * x; };

    const double gen_norm = gen.cwiseAbs().maxCoeff();
    double t = 0.0;
    double dt = std::min(tau, 0.1 / std::max(gen_norm, 1e-6));
    const double dt_min = tau * 1e-15;
    int consecutive_failures = 0;
    while (t < tau) {
        dt = std::min(dt, tau - t);
        if (ctrl.try_step(rhs, y, t, dt) == ode::fail) {
            if (++consecutive_failures > 60 || dt < dt_min) {
                std::ostringstream os;
                os << "adaptive step size underflow at t=" << t << " of " << tau << ", dt=" << dt;
                throw IntegrationError(os.str(), t, dt);
            }
        } else {
            consecutive_failures = 0;
        }
    }
    return y;
}

}  // namespace

Matrix evolve(const Superoperator& lv, const Matrix& x0, double tau, const EvolveOptions& opts) {
    if (x0.rows() != lv.dim || x0.cols() != lv.dim) throw DimensionError("evolve: dimension mismatch");
    if (tau < 0.0) throw DimensionError("evolve: tau must be nonnegative");
    if (tau == 0.0) return x0;
    if (lv.dim > opts.adaptive_max_dim)
        throw DimensionError("evolve: dimension above adaptive integration limit");
    if (lv.mat.cwiseAbs().maxCoeff() == 0.0) return x0;
    return unvec(integrate_vectorized(lv.mat, vec(x0), tau, opts), lv.dim);
}

Matrix evolve_expm(const Superoperator& lv, const Matrix& x0, double tau, const EvolveOptions& opts) {
    if (x0.rows() != lv.dim || x0.cols() != lv.dim)
        throw DimensionError("evolve_expm: dimension mismatch");
    if (tau < 0.0) throw DimensionError("evolve_expm: tau must be nonnegative");
    if (lv.dim > opts.expm_max_dim)
        throw DimensionError("evolve_expm: dimension above dense exponential limit");
    const Matrix propagator = (lv.mat * tau).exp();
    return unvec((propagator * vec(x0)).eval(), lv.dim);
}

double spectral_gap(const Superoperator& lv) {
    Eigen::ComplexEigenSolver<Matrix> es(lv.mat, false);
    if (es.info() != Eigen::Success)
        throw SolverError("eigendecomposition of the generator failed", std::nan(""));
    const double zero_tol = 1e-12 * std::max(1.0, lv.mat.cwiseAbs().maxCoeff());
    double gap = std::numeric_limits<double>::infinity();
    bool found = false;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const Complex ev = es.eigenvalues()(i);
        if (std::abs(ev) <= zero_tol) continue;
        found = true;
        gap = std::min(gap, std::abs(ev.real()));
    }
    if (!found)
        throw DegenerateKernelError("spectral_gap: all eigenvalues within tolerance of zero",
                                    Matrix::Zero(lv.dim, lv.dim), Matrix::Zero(lv.dim, lv.dim));
    return gap;
}

}  // namespace vcmps
