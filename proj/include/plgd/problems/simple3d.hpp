#pragma once

#include "plgd/objective.hpp"

namespace plgd {

/// f(x) = <Ax, x> with A = diag(L, mu, 0) in R^3: convex but not strongly
/// convex, gradient-dominated, and with a flat third coordinate along which
/// a constant gradient error drives the iterates to infinity.
struct Simple3DProblem {
    double L = 1.0;
    double mu = 0.1;

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;

    /// Hessian is diag(2L, 2mu, 0), so the analytic constants are 2L and 2mu.
    Objective objective() const;
};

}  // namespace plgd
