// bindings.cpp — Python bindings for the main operations

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vcmps/cli.hpp"
#include "vcmps/measure.hpp"
#include "vcmps/version.hpp"

namespace py = pybind11;
using namespace vcmps;

namespace {

VariationalSpace make_space(const py::object& obj) {
    if (py::isinstance<Cavity3Space>(obj)) return obj.cast<Cavity3Space>();
    if (py::isinstance<FreeCmpsSpace>(obj)) return obj.cast<FreeCmpsSpace>();
    throw py::type_error("expected Cavity3Space or FreeCmpsSpace");
}

}  // namespace

PYBIND11_MODULE(_vcmps, m) {
    m.doc() = "variational cMPS simulation of interacting 1D bosons from driven-cavity output";
    m.attr("__version__") = kVersion;

    // ----- algebra -----
    py::class_<Superoperator>(m, "Superoperator")
        .def_readonly("dim", &Superoperator::dim)
        .def_readonly("mat", &Superoperator::mat)
        .def("apply", &Superoperator::apply, py::arg("x"))
        .def("apply_adjoint", &Superoperator::apply_adjoint, py::arg("x"));

    py::class_<Density>(m, "Density").def_readonly("rho", &Density::rho);

    m.def("build_liouvillian", &build_liouvillian, py::arg("q"), py::arg("channels"));
    m.def(
        "steady_state", [](const Superoperator& lv) { return steady_state(lv); }, py::arg("lv"));
    m.def(
        "evolve",
        [](const Superoperator& lv, const Matrix& x0, double tau) { return evolve(lv, x0, tau); },
        py::arg("lv"), py::arg("x0"), py::arg("tau"));
    m.def("spectral_gap", &spectral_gap, py::arg("lv"));

    // ----- cavity -----
    py::class_<JcParams>(m, "JcParams")
        .def(py::init<>())
        .def(py::init([](double g, double omega, double kappa, double gamma, int n_max) {
                 return JcParams{g, omega, kappa, gamma, n_max};
             }),
             py::arg("g") = 1.0, py::arg("omega") = 0.5, py::arg("kappa") = 1.0,
             py::arg("gamma") = 0.0, py::arg("n_max") = 8)
        .def_readwrite("g", &JcParams::g)
        .def_readwrite("omega", &JcParams::omega)
        .def_readwrite("kappa", &JcParams::kappa)
        .def_readwrite("gamma", &JcParams::gamma)
        .def_readwrite("n_max", &JcParams::n_max);

    py::class_<CavitySystem>(m, "CavitySystem")
        .def_readonly("dim", &CavitySystem::dim)
        .def_readonly("hamiltonian", &CavitySystem::hamiltonian);

    py::class_<CoopReport>(m, "CoopReport")
        .def_readonly("cooperativity", &CoopReport::cooperativity)
        .def_readonly("feature_time", &CoopReport::feature_time)
        .def_readonly("coherence_time", &CoopReport::coherence_time)
        .def_readonly("feasible", &CoopReport::feasible);

    m.def("jaynes_cummings", &jaynes_cummings, py::arg("params"));
    m.def("cooperativity", &cooperativity, py::arg("g"), py::arg("kappa"), py::arg("gamma"));

    py::enum_<CavityObservable>(m, "CavityObservable")
        .value("DENSITY", CavityObservable::Density)
        .value("G2_ZERO", CavityObservable::G2Zero)
        .value("ENERGY", CavityObservable::Energy);
    m.def("truncation_converged", &truncation_converged, py::arg("params"), py::arg("observable"),
          py::arg("tol"));

    // ----- cmps -----
    py::class_<CmpsRep>(m, "CmpsRep")
        .def_readonly("dim", &CmpsRep::dim)
        .def_readonly("q", &CmpsRep::q)
        .def_readonly("r_obs", &CmpsRep::r_obs)
        .def_readonly("r_unobs", &CmpsRep::r_unobs)
        .def_readonly("scale", &CmpsRep::scale);

    py::class_<FieldObservables>(m, "FieldObservables")
        .def_readonly("density", &FieldObservables::density)
        .def_readonly("kinetic", &FieldObservables::kinetic)
        .def_readonly("pair", &FieldObservables::pair);

    py::class_<CorrelationSeries>(m, "CorrelationSeries")
        .def_readonly("taus", &CorrelationSeries::taus)
        .def_readonly("values", &CorrelationSeries::values);

    m.def("from_cavity", &from_cavity, py::arg("system"), py::arg("scale"));
    m.def(
        "from_free",
        [](const Matrix& k, const Matrix& r, double scale) {
            return from_free(FreeParams{k.rows(), k, r, scale});
        },
        py::arg("k"), py::arg("r"), py::arg("scale") = 1.0);
    m.def("liouvillian", &liouvillian, py::arg("rep"));
    m.def("stationary", &stationary, py::arg("rep"));
    m.def("observables", &observables, py::arg("rep"));
    m.def(
        "g1",
        [](const CmpsRep& rep, const std::vector<double>& taus) { return g1(rep, taus); },
        py::arg("rep"), py::arg("taus"));
    m.def(
        "g2",
        [](const CmpsRep& rep, const std::vector<double>& taus) { return g2(rep, taus); },
        py::arg("rep"), py::arg("taus"));
    m.def(
        "kinetic_fd", [](const CmpsRep& rep, double eps) { return kinetic_fd(rep, eps); },
        py::arg("rep"), py::arg("eps"));

    // ----- model -----
    py::class_<LiebLinigerParams>(m, "LiebLinigerParams")
        .def(py::init([](double v, double mu) {
                 return LiebLinigerParams{v, mu};
             }),
             py::arg("v") = 1.0, py::arg("mu") = 1.0)
        .def_readwrite("v", &LiebLinigerParams::v)
        .def_readwrite("mu", &LiebLinigerParams::mu);

    py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
        .def_readonly("kinetic", &EnergyBreakdown::kinetic)
        .def_readonly("interaction", &EnergyBreakdown::interaction)
        .def_readonly("potential", &EnergyBreakdown::potential)
        .def_readonly("total", &EnergyBreakdown::total);

    m.def("energy_density", &energy_density, py::arg("rep"), py::arg("params"));
    m.def(
        "interaction_general",
        [](const CmpsRep& rep, double delta_weight, const std::function<double(double)>& smooth,
           double cutoff) {
            return interaction_general(rep, Kernel{delta_weight, smooth, cutoff});
        },
        py::arg("rep"), py::arg("delta_weight") = 0.0, py::arg("smooth") = nullptr,
        py::arg("cutoff") = 10.0);
    m.def("rescale", &rescale, py::arg("rep"), py::arg("c"));

    // ----- optimizer -----
    py::class_<Cavity3Space>(m, "Cavity3Space")
        .def(py::init([](double kappa, double gamma, int n_max) {
                 return Cavity3Space{kappa, gamma, n_max};
             }),
             py::arg("kappa") = 1.0, py::arg("gamma") = 0.0, py::arg("n_max") = 8)
        .def_readwrite("kappa", &Cavity3Space::kappa)
        .def_readwrite("gamma", &Cavity3Space::gamma)
        .def_readwrite("n_max", &Cavity3Space::n_max);

    py::class_<FreeCmpsSpace>(m, "FreeCmpsSpace")
        .def(py::init([](Eigen::Index dim) { return FreeCmpsSpace{dim}; }), py::arg("dim") = 1)
        .def_readwrite("dim", &FreeCmpsSpace::dim);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("step", &OptimizerConfig::step)
        .def_readwrite("fd_delta", &OptimizerConfig::fd_delta)
        .def_readwrite("tol", &OptimizerConfig::tol)
        .def_readwrite("max_iter", &OptimizerConfig::max_iter)
        .def_readwrite("lower", &OptimizerConfig::lower)
        .def_readwrite("upper", &OptimizerConfig::upper)
        .def_readwrite("rescale_mu", &OptimizerConfig::rescale_mu);

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("iteration", &TraceEntry::iteration)
        .def_readonly("f", &TraceEntry::f)
        .def_readonly("accepted", &TraceEntry::accepted)
        .def_readonly("std_error", &TraceEntry::std_error);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("lambda_star", &OptResult::lambda_star)
        .def_readonly("f_star", &OptResult::f_star)
        .def_readonly("breakdown", &OptResult::breakdown)
        .def_readonly("trace", &OptResult::trace)
        .def_readonly("converged", &OptResult::converged)
        .def_readonly("note", &OptResult::note);

    m.def(
        "build_rep",
        [](const py::object& space, const Eigen::VectorXd& lam) {
            return build_rep(make_space(space), lam);
        },
        py::arg("space"), py::arg("lambda_"));
    m.def(
        "evaluate",
        [](const py::object& space, const Eigen::VectorXd& lam, const LiebLinigerParams& p) {
            return evaluate(make_space(space), lam, p);
        },
        py::arg("space"), py::arg("lambda_"), py::arg("params"));
    m.def(
        "grad_fd",
        [](const py::object& space, const Eigen::VectorXd& lam, const LiebLinigerParams& p,
           double fd_delta) { return grad_fd(make_space(space), lam, p, fd_delta); },
        py::arg("space"), py::arg("lambda_"), py::arg("params"), py::arg("fd_delta") = 1e-4);
    m.def(
        "minimize",
        [](const py::object& space, const Eigen::VectorXd& lam0, const LiebLinigerParams& p,
           const OptimizerConfig& cfg) { return minimize(make_space(space), lam0, p, cfg); },
        py::arg("space"), py::arg("lambda0"), py::arg("params"),
        py::arg("config") = OptimizerConfig{});
    m.def(
        "sweep",
        [](const py::object& space, const std::vector<double>& v_list, double mu,
           const Eigen::VectorXd& lam0, const OptimizerConfig& cfg, bool warm_start, int jobs) {
            return sweep(make_space(space), v_list, mu, lam0, cfg, {warm_start, jobs});
        },
        py::arg("space"), py::arg("v_list"), py::arg("mu"), py::arg("lambda0"),
        py::arg("config") = OptimizerConfig{}, py::arg("warm_start") = true, py::arg("jobs") = 1);
    m.def("embed_free", &embed_free, py::arg("from_space"), py::arg("lambda_"),
          py::arg("to_space"), py::arg("coupling") = 1e-3, py::arg("seed") = 7);
    m.def("random_free_start", &random_free_start, py::arg("space"), py::arg("scale"),
          py::arg("seed"), py::arg("amplitude") = 0.5);

    // ----- measure -----
    py::enum_<CorrelatorKind>(m, "CorrelatorKind")
        .value("INTENSITY", CorrelatorKind::Intensity)
        .value("G1", CorrelatorKind::G1)
        .value("G2", CorrelatorKind::G2);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init([](long long shots, std::uint64_t seed) {
                 return NoiseModel{shots, seed, DetectionScheme::Intensity};
             }),
             py::arg("shots") = 1, py::arg("seed") = 0)
        .def_readwrite("shots", &NoiseModel::shots)
        .def_readwrite("seed", &NoiseModel::seed);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_error", &Estimate::std_error)
        .def_readonly("shots", &Estimate::shots);

    m.def("noisy_correlator", &noisy_correlator, py::arg("rep"), py::arg("kind"), py::arg("tau"),
          py::arg("noise"));
    m.def("noisy_energy", &noisy_energy, py::arg("rep"), py::arg("params"), py::arg("eps"),
          py::arg("noise"));
    m.def(
        "noisy_minimize",
        [](const py::object& space, const Eigen::VectorXd& lam0, const LiebLinigerParams& p,
           const OptimizerConfig& cfg, const NoiseModel& nm, double kinetic_eps) {
            return noisy_minimize(make_space(space), lam0, p, cfg, nm, kinetic_eps);
        },
        py::arg("space"), py::arg("lambda0"), py::arg("params"),
        py::arg("config") = OptimizerConfig{}, py::arg("noise") = NoiseModel{},
        py::arg("kinetic_eps") = 0.5);

    // ----- cli -----
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv;
            argv.push_back("vcmps");
            for (const auto& a : args) argv.push_back(a.c_str());
            return vcmps::cli::run(int(argv.size()), argv.data());
        },
        py::arg("args"));
}
