#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace plgd {

/// Rejected parameter combination (bad dimension, k >= n, zero constant vector, ...).
struct InvalidConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An objective evaluation produced a non-finite value or gradient.
/// Carries the point at which the evaluation blew up.
struct NumericOverflowError : std::runtime_error {
    NumericOverflowError(std::string what, Eigen::VectorXd at)
        : std::runtime_error(std::move(what)), point(std::move(at)) {}
    Eigen::VectorXd point;
};

/// The adaptive step-size doubling loop exceeded its sanity cap; the
/// value oracle is inconsistent with the gradient oracle.
struct InnerLoopDivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace plgd
