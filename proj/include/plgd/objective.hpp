#pragma once

#include <functional>
#include <optional>

#include <Eigen/Core>

namespace plgd {

using Vector = Eigen::VectorXd;

/// A smooth objective with its exact first-order oracle and whatever
/// constants are known analytically. f_star / lipschitz_L / pl_mu stay
/// empty when the problem does not provide them in closed form.
struct Objective {
    int dim = 0;
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::optional<double> f_star;
    std::optional<double> lipschitz_L;  // Lipschitz constant of the gradient
    std::optional<double> pl_mu;        // gradient-dominance modulus

    double gap(double f_value) const { return f_star ? f_value - *f_star : f_value; }
};

/// Central-difference gradient, (f(x + h e_i) - f(x - h e_i)) / 2h per coordinate.
Vector finite_diff_gradient(const Objective& objective, const Vector& x, double h);

/// Default step for gradient checking: 1e-6 * max(1, ||x||).
double finite_diff_step(const Vector& x);

}  // namespace plgd
