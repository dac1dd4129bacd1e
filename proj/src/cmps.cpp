// cmps.cpp — Cavity→cMPS mapping, stationary observables, Glauber correlators

#include "vcmps/cmps.hpp"

#include <cmath>
#include <sstream>

namespace vcmps {

void validate(const CmpsRep& rep) {
    if (rep.dim < 1 || rep.q.rows() != rep.dim || rep.q.cols() != rep.dim)
        throw DimensionError("CmpsRep: Q must be dim x dim with dim >= 1");
    if (rep.r_obs.rows() != rep.dim || rep.r_obs.cols() != rep.dim)
        throw DimensionError("CmpsRep: R must match Q's dimension");
    if (!(rep.scale > 0.0)) throw DimensionError("CmpsRep: scale must be positive");
    Matrix defect = rep.q + rep.q.adjoint() + rep.r_obs.adjoint() * rep.r_obs;
    for (const auto& r : rep.r_unobs) {
        if (r.rows() != rep.dim || r.cols() != rep.dim)
            throw DimensionError("CmpsRep: unobserved channel dimension mismatch");
        defect += r.adjoint() * r;
    }
    const double norm = defect.norm();
    if (norm > 1e-10)
        throw NumericalHealthError("CmpsRep: stationarity identity Q+Q†+ΣR†R = 0 violated", norm);
}

CmpsRep from_cavity(const CavitySystem& sys, double scale) {
    if (!(scale > 0.0)) throw DimensionError("from_cavity: scale must be positive");
    int observed = 0;
    for (const auto& ch : sys.channels) observed += ch.observed ? 1 : 0;
    if (observed != 1)
        throw DimensionError("from_cavity: exactly one observed channel required, got " +
                             std::to_string(observed));

    CmpsRep rep;
    rep.dim = sys.dim;
    rep.scale = scale;
    Matrix q = Complex(0.0, -1.0) / scale * sys.hamiltonian;
    for (const auto& ch : sys.channels) {
        Matrix r = std::sqrt(ch.rate / scale) * ch.op;
        q -= 0.5 * r.adjoint() * r;
        if (ch.observed)
            rep.r_obs = std::move(r);
        else
            rep.r_unobs.push_back(std::move(r));
    }
    rep.q = std::move(q);
    validate(rep);
    return rep;
}

CmpsRep from_free(const FreeParams& p) {
    if (p.dim < 1 || p.k.rows() != p.dim || p.k.cols() != p.dim || p.r.rows() != p.dim ||
        p.r.cols() != p.dim)
        throw DimensionError("from_free: K and R must be dim x dim with dim >= 1");
    if (!(p.scale > 0.0)) throw DimensionError("from_free: scale must be positive");
    if (!is_hermitian(p.k, 1e-12))
        throw NumericalHealthError("from_free: K must be Hermitian", hermitian_defect(p.k));

    CmpsRep rep;
    rep.dim = p.dim;
    rep.scale = p.scale;
    rep.q = (Complex(0.0, -1.0) * p.k - 0.5 * p.r.adjoint() * p.r) / p.scale;
    rep.r_obs = p.r / std::sqrt(p.scale);
    validate(rep);
    return rep;
}

Superoperator liouvillian(const CmpsRep& rep) {
    validate(rep);
    std::vector<Matrix> channels;
    channels.push_back(rep.r_obs);
    channels.insert(channels.end(), rep.r_unobs.begin(), rep.r_unobs.end());
    return build_liouvillian(rep.q, channels);
}

Density stationary(const CmpsRep& rep) { return steady_state(liouvillian(rep)); }

namespace {

double real_nonnegative(Complex value, const char* what) {
    if (std::abs(value.imag()) > 1e-10)
        throw NumericalHealthError(std::string(what) + ": expectation not real", value.imag());
    if (value.real() < -1e-10)
        throw NumericalHealthError(std::string(what) + ": expectation negative", value.real());
    return std::max(value.real(), 0.0);
}

FieldObservables observables_from(const CmpsRep& rep, const Matrix& rho) {
    const Matrix& r = rep.r_obs;
    const Matrix commutator = rep.q * r - r * rep.q;
    FieldObservables obs;
    obs.density = real_nonnegative((r.adjoint() * r * rho).trace(), "density");
    obs.kinetic =
        real_nonnegative((commutator.adjoint() * commutator * rho).trace(), "kinetic density");
    obs.pair = real_nonnegative((r.adjoint() * r.adjoint() * r * r * rho).trace(),
                                "pair correlation at zero");
    return obs;
}

void check_taus(const std::vector<double>& taus) {
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (taus[i] < 0.0 || !std::isfinite(taus[i]))
            throw DimensionError("correlator: taus must be finite and nonnegative");
        if (i > 0 && taus[i] <= taus[i - 1])
            throw DimensionError("correlator: taus must be strictly ascending");
    }
}

// Shared two-time machinery: seed X(0), march X through the tau grid with the
// propagator (quantum regression), record tr(M X) at each grid point.
CorrelationSeries regression_series(const CmpsRep& rep, const std::vector<double>& taus,
                                    const Matrix& seed, const Matrix& measure,
                                    CorrelationKind kind, const EvolveOptions& opts) {
    check_taus(taus);
    CorrelationSeries series;
    series.kind = kind;
    series.taus = taus;
    series.values.reserve(taus.size());
    if (taus.empty()) return series;

    const Superoperator lv = liouvillian(rep);
    Matrix x = seed;
    double reached = 0.0;
    for (double tau : taus) {
        x = evolve(lv, x, tau - reached, opts);
        reached = tau;
        series.values.push_back((measure * x).trace());
    }
    return series;
}

}  // namespace

CorrelationSeries g1(const CmpsRep& rep, const std::vector<double>& taus,
                     const EvolveOptions& opts) {
    const Density rho = stationary(rep);
    return regression_series(rep, taus, rho.rho * rep.r_obs.adjoint(), rep.r_obs,
                             CorrelationKind::G1, opts);
}

CorrelationSeries g2(const CmpsRep& rep, const std::vector<double>& taus,
                     const EvolveOptions& opts) {
    const Density rho = stationary(rep);
    return regression_series(rep, taus, rep.r_obs * rho.rho * rep.r_obs.adjoint(),
                             rep.r_obs.adjoint() * rep.r_obs, CorrelationKind::G2, opts);
}

double kinetic_fd(const CmpsRep& rep, double eps, const EvolveOptions& opts) {
    if (!(eps > 0.0)) throw DimensionError("kinetic_fd: eps must be positive");
    try {
        const double gap = spectral_gap(liouvillian(rep));
        if (eps * gap > 0.1) {
            std::ostringstream os;
            os << "kinetic_fd: eps " << eps << " is large against the correlation scale 1/"
               << gap << "; estimate carries O(eps) bias";
            warn(os.str());
        }
    } catch (const DegenerateKernelError&) {
        // no relaxation scale to compare against (e.g. D = 1)
    }
    const CorrelationSeries series = g1(rep, {0.0, eps}, opts);
    const double at_zero = series.values[0].real();
    const double at_eps = series.values[1].real();
    return 2.0 * (at_zero - at_eps) / (eps * eps);
}

}  // namespace vcmps
