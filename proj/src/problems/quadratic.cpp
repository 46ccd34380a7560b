#include "plgd/problems/quadratic.hpp"

#include <limits>

#include "plgd/errors.hpp"

namespace plgd {

QuadraticDiagProblem::QuadraticDiagProblem(Eigen::VectorXd d, int zero_count)
    : d_(std::move(d)), k_(zero_count) {
    const int n = static_cast<int>(d_.size());
    if (n < 1 || k_ < 0 || k_ >= n)
        throw InvalidConfigError("QuadraticDiagProblem: need 0 <= k < n");
    for (int j = 0; j < k_; ++j)
        if (d_[j] != 0.0) throw InvalidConfigError("QuadraticDiagProblem: leading k entries must be 0");
    mu_ = std::numeric_limits<double>::infinity();
    L_ = 0.0;
    for (int j = k_; j < n; ++j) {
        if (!(d_[j] > 0.0))
            throw InvalidConfigError("QuadraticDiagProblem: trailing entries must be positive");
        mu_ = std::min(mu_, d_[j]);
        L_ = std::max(L_, d_[j]);
    }
}

QuadraticDiagProblem QuadraticDiagProblem::sample(int n, int k, double mu, double L,
                                                  RngStream& rng) {
    if (k < 0 || k >= n) throw InvalidConfigError("QuadraticDiagProblem::sample: need 0 <= k < n");
    if (!(0.0 < mu && mu <= L))
        throw InvalidConfigError("QuadraticDiagProblem::sample: need 0 < mu <= L");
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    int arg_min = k;
    int arg_max = k;
    for (int j = k; j < n; ++j) {
        d[j] = rng.uniform(mu, L);
        if (d[j] < d[arg_min]) arg_min = j;
        if (d[j] > d[arg_max]) arg_max = j;
    }
    // Pin the extremes so the stored constants are exact, not probabilistic.
    d[arg_max] = L;
    if (arg_min != arg_max) d[arg_min] = mu;
    return QuadraticDiagProblem(std::move(d), k);
}

double QuadraticDiagProblem::value(const Vector& x) const {
    return 0.5 * d_.cwiseProduct(x).dot(x);
}

Vector QuadraticDiagProblem::gradient(const Vector& x) const { return d_.cwiseProduct(x); }

Objective QuadraticDiagProblem::objective() const {
    Objective obj;
    obj.dim = dim();
    obj.value = [p = *this](const Vector& x) { return p.value(x); };
    obj.gradient = [p = *this](const Vector& x) { return p.gradient(x); };
    obj.f_star = 0.0;
    obj.lipschitz_L = L_;
    obj.pl_mu = mu_;
    return obj;
}

}  // namespace plgd
