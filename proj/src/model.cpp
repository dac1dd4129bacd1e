// model.cpp — Energy functional evaluation, kernel quadrature, scaling maps

#include "vcmps/model.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace vcmps {

void validate(const LiebLinigerParams& p) {
    std::vector<std::string> violations;
    // v = 0 leaves the functional unbounded below for μ > 0: the density term
    // -μn has nothing to stop it.
    if (!(p.v > 0.0)) violations.push_back("LiebLinigerParams: v must be positive");
    if (!std::isfinite(p.mu)) violations.push_back("LiebLinigerParams: mu must be finite");
    if (!violations.empty()) throw ConfigError(std::move(violations));
}

EnergyBreakdown energy_density(const CmpsRep& rep, const LiebLinigerParams& p) {
    validate(p);
    const FieldObservables obs = observables(rep);
    EnergyBreakdown e;
    e.kinetic = obs.kinetic;
    e.interaction = p.v * obs.pair;
    e.potential = -p.mu * obs.density;
    e.total = e.kinetic + e.interaction + e.potential;
    return e;
}

double interaction_general(const CmpsRep& rep, const Kernel& k) {
    if (!(k.cutoff > 0.0)) throw DimensionError("interaction_general: cutoff must be positive");
    if (k.delta_weight < 0.0)
        throw DimensionError("interaction_general: delta_weight must be nonnegative");

    const Density rho = stationary(rep);
    const Matrix& r = rep.r_obs;
    const double pair_zero =
        (r.adjoint() * r.adjoint() * r * r * rho.rho).trace().real();
    double result = k.delta_weight * pair_zero;
    if (!k.smooth) return result;

    const Superoperator lv = liouvillian(rep);
    try {
        const double gap = spectral_gap(lv);
        if (k.cutoff < 5.0 / gap) {
            std::ostringstream os;
            os << "interaction_general: cutoff " << k.cutoff
               << " is short against the correlation length " << 1.0 / gap
               << "; tail contributions may be missed";
            warn(os.str());
        }
    } catch (const DegenerateKernelError&) {
        // no intrinsic length scale (e.g. D = 1); any cutoff is as good as another
    }

    // G₂ evaluations are the expensive part; the quadrature revisits abscissae
    // across refinement levels, so memoize per separation.
    const Matrix seed = r * rho.rho * r.adjoint();
    const Matrix measure = r.adjoint() * r;
    std::map<double, double> cache;
    auto pair_at = [&](double x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        const Matrix propagated = evolve(lv, seed, x);
        const double value = (measure * propagated).trace().real();
        cache.emplace(x, value);
        return value;
    };
    auto integrand = [&](double x) { return k.smooth(x) * pair_at(x); };

    double error_estimate = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, k.cutoff, 12, 1e-7, &error_estimate);
    const double scale = std::max(std::abs(integral), 1e-12);
    if (error_estimate > 1e-6 * scale) {
        std::ostringstream os;
        os << "interaction_general: quadrature stalled, error estimate " << error_estimate
           << " on integral " << integral;
        throw QuadratureError(os.str(), error_estimate);
    }
    return result + 2.0 * integral;
}

CmpsRep rescale(const CmpsRep& rep, double c) {
    if (!(c > 0.0)) throw DimensionError("rescale: c must be positive");
    validate(rep);
    CmpsRep out = rep;
    const double root = std::sqrt(c);
    out.q *= c;
    out.r_obs *= root;
    for (auto& r : out.r_unobs) r *= root;
    return out;
}

ScaledProblem reduce_to_unit_mu(double v, double mu) {
    if (!(v > 0.0)) throw DimensionError("reduce_to_unit_mu: v must be positive");
    if (!(mu > 0.0)) throw DimensionError("reduce_to_unit_mu: recipe applies to mu > 0 only");
    const double c = std::sqrt(mu);
    return ScaledProblem{v / c, c};
}

}  // namespace vcmps
