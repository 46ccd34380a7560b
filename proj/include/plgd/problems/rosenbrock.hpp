#pragma once

#include "plgd/objective.hpp"

namespace plgd {

/// Two-dimensional Rosenbrock function 100(x2 - x1^2)^2 + (x1 - 1)^2.
/// Minimum 0 at (1, 1); the gradient is Lipschitz only locally, so no
/// global constant is attached.
double rosenbrock_value(const Vector& x);
Vector rosenbrock_gradient(const Vector& x);
Objective rosenbrock_objective();

}  // namespace plgd
