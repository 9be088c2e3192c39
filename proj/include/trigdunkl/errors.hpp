#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace trigdunkl {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke an interface contract (e.g. a test function without a derivative).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series or quadrature did not reach its stopping criterion.
/// Carries the best value obtained so far and an error estimate for it.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, std::complex<double> partial, double est_error)
        : std::runtime_error(what), partial_(partial), est_error_(est_error) {}

    std::complex<double> partial() const noexcept { return partial_; }
    double est_error() const noexcept { return est_error_; }

private:
    std::complex<double> partial_;
    double est_error_;
};

/// The integrand produced a non-finite value at an interior node.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double node)
        : std::runtime_error(what), node_(node) {}

    double node() const noexcept { return node_; }

private:
    double node_;
};

}  // namespace trigdunkl
