#pragma once

#include <stdexcept>
#include <string>

namespace transmutant {

struct invalid_argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct out_of_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Picard iteration did not reach the requested tolerance.
struct convergence_failure : std::runtime_error {
    double last_residual;
    int iterations;
    convergence_failure(const std::string& what, double residual, int iters)
        : std::runtime_error(what), last_residual(residual), iterations(iters) {}
};

struct invalid_state_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// |f| dipped below the nonvanishing threshold; every downstream formula divides by f.
struct vanishing_solution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Supplied (q, f) pair fails the f'' = q f residual check.
struct inconsistent_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace transmutant
