// errors.hpp — Exception types carrying numerical diagnostics, plus the warning hook

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vcmps {

// Shape or precondition violation on an input.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A linear solve or fixed-point search missed the requested residual.
struct SolverError : std::runtime_error {
    double residual;
    SolverError(const std::string& msg, double residual_)
        : std::runtime_error(msg), residual(residual_) {}
};

// The generator's kernel is numerically more than one-dimensional; both
// near-null candidates are reported (trace-normalized where possible).
struct DegenerateKernelError : std::runtime_error {
    Eigen::MatrixXcd candidate_a;
    Eigen::MatrixXcd candidate_b;
    DegenerateKernelError(const std::string& msg, Eigen::MatrixXcd a, Eigen::MatrixXcd b)
        : std::runtime_error(msg), candidate_a(std::move(a)), candidate_b(std::move(b)) {}
};

// Adaptive integration could not advance (step-size underflow etc.).
struct IntegrationError : std::runtime_error {
    double t_reached;
    double last_step;
    IntegrationError(const std::string& msg, double t, double dt)
        : std::runtime_error(msg), t_reached(t), last_step(dt) {}
};

// An expectation value came out negative / complex beyond tolerance.
struct NumericalHealthError : std::runtime_error {
    double value;
    NumericalHealthError(const std::string& msg, double value_)
        : std::runtime_error(msg), value(value_) {}
};

// Fock-truncation escalation exhausted; carries the observed sequence.
struct TruncationError : std::runtime_error {
    std::vector<double> observed;
    TruncationError(const std::string& msg, std::vector<double> seq)
        : std::runtime_error(msg), observed(std::move(seq)) {}
};

// Energy evaluation failed at a parameter point; carries the point.
struct EvaluationError : std::runtime_error {
    Eigen::VectorXd lambda;
    EvaluationError(const std::string& msg, Eigen::VectorXd lambda_)
        : std::runtime_error(msg), lambda(std::move(lambda_)) {}
};

// A finite-difference probe failed; identifies the component.
struct GradientError : std::runtime_error {
    int component;
    GradientError(const std::string& msg, int component_)
        : std::runtime_error(msg), component(component_) {}
};

// Adaptive quadrature did not reach tolerance; carries the tail estimate.
struct QuadratureError : std::runtime_error {
    double tail_estimate;
    QuadratureError(const std::string& msg, double tail)
        : std::runtime_error(msg), tail_estimate(tail) {}
};

// Configuration rejected; lists every violation, not just the first.
struct ConfigError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ConfigError(std::vector<std::string> violations_);
};

// Non-fatal diagnostics (large finite-difference offsets, short quadrature
// cutoffs, ...) go through a process-wide handler. Default: stderr.
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace vcmps
