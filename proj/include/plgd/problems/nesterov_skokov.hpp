#pragma once

#include <vector>

#include "plgd/objective.hpp"

namespace plgd {

/// Chained Rosenbrock-type function
///   f(x) = 1/4 (1 - x1)^2 + sum_{i=1..n-1} (x_{i+1} - 2 x_i^2 + 1)^2,
/// the sum of squares of the residuals g1 = (x1 - 1)/2,
/// g_i = x_i - 2 x_{i-1}^2 + 1. Global minimum 0 at the all-ones vector.
struct NesterovSkokovProblem {
    int n = 2;

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;
    Objective objective() const;

    /// Leading principal minors of J J^T (J the residual Jacobian) via the
    /// tridiagonal recursion f_j = (16 x_{j-1}^2 + 1) f_{j-1} - 16 x_{j-1}^2 f_{j-2}
    /// seeded with f_1 = f_2 = 1/4. All of them are positive, which is what
    /// makes the function gradient-dominated on compacts.
    std::vector<double> minor_sequence(const Vector& x) const;
};

}  // namespace plgd
