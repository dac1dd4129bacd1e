// cavity.cpp — Jaynes–Cummings construction and feasibility diagnostics

#include "vcmps/cavity.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace vcmps {

Matrix sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;  // |e⟩⟨g|
    return m;
}

Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;  // |g⟩⟨e|
    return m;
}

Matrix annihilation(Eigen::Index nlevels) {
    if (nlevels < 1) throw DimensionError("annihilation: nlevels must be >= 1");
    Matrix m = Matrix::Zero(nlevels, nlevels);
    for (Eigen::Index n = 1; n < nlevels; ++n) m(n - 1, n) = std::sqrt(double(n));
    return m;
}

Matrix number_operator(Eigen::Index nlevels) {
    if (nlevels < 1) throw DimensionError("number_operator: nlevels must be >= 1");
    Matrix m = Matrix::Zero(nlevels, nlevels);
    for (Eigen::Index n = 0; n < nlevels; ++n) m(n, n) = double(n);
    return m;
}

void validate(const JcParams& p) {
    std::vector<std::string> violations;
    if (!(p.kappa > 0.0)) violations.push_back("JcParams: kappa must be positive");
    if (p.gamma < 0.0) violations.push_back("JcParams: gamma must be nonnegative");
    if (p.n_max < 1) violations.push_back("JcParams: n_max must be >= 1");
    if (!std::isfinite(p.g) || !std::isfinite(p.omega))
        violations.push_back("JcParams: g and omega must be finite");
    if (!violations.empty()) throw ConfigError(std::move(violations));
}

CavitySystem jaynes_cummings(const JcParams& p) {
    validate(p);
    const Eigen::Index nf = p.n_max + 1;
    const Matrix a = annihilation(nf);
    const Matrix id_f = Matrix::Identity(nf, nf);
    const Matrix id_a = Matrix::Identity(2, 2);
    const Matrix sp = sigma_plus();
    const Matrix sm = sigma_minus();

    Matrix h = p.g * (kron(sp, a) + kron(sm, a.adjoint())) + p.omega * kron(sp + sm, id_f);

    CavitySystem sys;
    sys.dim = 2 * nf;
    sys.hamiltonian = std::move(h);
    sys.channels.push_back({p.kappa, kron(id_a, a), true, "cavity output"});
    if (p.gamma > 0.0)
        sys.channels.push_back({2.0 * p.gamma, kron(sm, id_f), false, "spontaneous emission"});
    return sys;
}

CoopReport cooperativity(double g, double kappa, double gamma) {
    if (!(kappa > 0.0)) throw DimensionError("cooperativity: kappa must be positive");
    if (gamma < 0.0) throw DimensionError("cooperativity: gamma must be nonnegative");
    const double inf = std::numeric_limits<double>::infinity();
    CoopReport rep;
    rep.feature_time = kappa / (g * g);  // +inf at g = 0
    if (gamma == 0.0) {
        rep.cooperativity = inf;
        rep.coherence_time = inf;
        rep.feasible = true;
        return rep;
    }
    rep.cooperativity = g * g / (kappa * gamma);
    rep.coherence_time = 1.0 / (2.0 * gamma);
    rep.feasible = rep.feature_time <= rep.coherence_time;
    return rep;
}

namespace {

// Steady-state observable of the bare cavity system (s = 1 in the field
// mapping; the truncation question does not depend on s).
double truncation_observable(const JcParams& p, CavityObservable which) {
    const CavitySystem sys = jaynes_cummings(p);
    Matrix q = Complex(0.0, -1.0) * sys.hamiltonian;
    std::vector<Matrix> jumps;
    for (const auto& ch : sys.channels) {
        jumps.push_back(std::sqrt(ch.rate) * ch.op);
        q -= 0.5 * jumps.back().adjoint() * jumps.back();
    }
    const Density rho = steady_state(build_liouvillian(q, jumps));

    const Matrix a = kron(Matrix::Identity(2, 2), annihilation(p.n_max + 1));
    switch (which) {
        case CavityObservable::Density:
            return (a.adjoint() * a * rho.rho).trace().real();
        case CavityObservable::G2Zero:
            return (a.adjoint() * a.adjoint() * a * a * rho.rho).trace().real();
        case CavityObservable::Energy: {
            // f at (v, μ, s) = (1, 1, 1): tr([Q,R]†[Q,R]ρ) + tr(R†²R²ρ) - tr(R†Rρ)
            const Matrix r = std::sqrt(p.kappa) * a;
            const Matrix c = q * r - r * q;
            const double kinetic = (c.adjoint() * c * rho.rho).trace().real();
            const double pair = (r.adjoint() * r.adjoint() * r * r * rho.rho).trace().real();
            const double density = (r.adjoint() * r * rho.rho).trace().real();
            return kinetic + pair - density;
        }
    }
    throw DimensionError("truncation_observable: unknown observable");
}

std::mutex truncation_cache_mutex;
std::map<std::tuple<double, double, double, double, int, double>, int> truncation_cache;

}  // namespace

int truncation_converged(const JcParams& p, CavityObservable observable, double tol) {
    validate(p);
    if (!(tol > 0.0)) throw DimensionError("truncation_converged: tol must be positive");

    const auto key = std::make_tuple(p.g, p.omega, p.kappa, p.gamma, int(observable), tol);
    {
        std::lock_guard lock(truncation_cache_mutex);
        auto it = truncation_cache.find(key);
        if (it != truncation_cache.end()) return it->second;
    }

    constexpr int n_limit = 32;
    std::vector<double> observed;  // value at n_max = 1, 2, 3, ...
    auto value_at = [&](int n) {
        while (int(observed.size()) < n) {
            JcParams q = p;
            q.n_max = int(observed.size()) + 1;
            observed.push_back(truncation_observable(q, observable));
        }
        return observed[n - 1];
    };
    for (int n = 1; n + 2 <= n_limit; ++n) {
        const double now = value_at(n);
        const double next = value_at(n + 2);
        const double scale = std::max(std::abs(now), std::abs(next));
        if (std::abs(next - now) <= tol * scale || std::abs(next - now) <= 1e-15) {
            std::lock_guard lock(truncation_cache_mutex);
            truncation_cache[key] = n;
            return n;
        }
    }
    std::ostringstream os;
    os << "no truncation convergence by n_max = " << n_limit << " at tol " << tol;
    throw TruncationError(os.str(), std::move(observed));
}

}  // namespace vcmps
