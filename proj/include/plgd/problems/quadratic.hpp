#pragma once

#include <Eigen/Core>

#include "plgd/objective.hpp"
#include "plgd/rng.hpp"

namespace plgd {

/// Diagonal quadratic f(x) = 1/2 sum_j d_j x_j^2 with d_j >= 0 and the
/// first k coefficients equal to zero. The Hessian is diag(d), so the
/// gradient Lipschitz constant is max d_j and the gradient-dominance
/// modulus is the smallest nonzero d_j; the minimum value is 0 on the
/// subspace spanned by the zero coefficients.
class QuadraticDiagProblem {
public:
    /// Takes coefficients directly; the first zero_count entries must be 0
    /// and the rest positive.
    QuadraticDiagProblem(Eigen::VectorXd d, int zero_count);

    /// Coefficients sampled i.i.d. uniform on [mu, L]; one sample is clamped
    /// to exactly mu and one to exactly L so the stored constants are exact.
    static QuadraticDiagProblem sample(int n, int k, double mu, double L, RngStream& rng);

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;

    int dim() const { return static_cast<int>(d_.size()); }
    int zero_count() const { return k_; }
    double mu() const { return mu_; }
    double lipschitz() const { return L_; }
    const Eigen::VectorXd& coefficients() const { return d_; }

    Objective objective() const;

private:
    Eigen::VectorXd d_;
    int k_;
    double mu_;
    double L_;
};

}  // namespace plgd
