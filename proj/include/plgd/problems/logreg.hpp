#pragma once

#include <string>

#include <Eigen/Core>

#include "plgd/objective.hpp"
#include "plgd/rng.hpp"

namespace plgd {

/// Synthetic logistic-regression instance whose feature matrix has rank
/// k << n, built so a finite minimizer exists: W stacks a rank-k
/// orthonormal block twice (with opposite labels the second time) plus
/// random combinations of that block.
struct LogRegData {
    Eigen::MatrixXd W;  // m x n, rows are the samples w_i
    Eigen::VectorXd y;  // labels in {-1, +1}, size m
    int k = 0;          // rank of W

    int m() const { return static_cast<int>(W.rows()); }
    int n() const { return static_cast<int>(W.cols()); }
};

/// Requires k <= min(n, m/2).
LogRegData generate_logreg_data(int n, int m, int k, RngStream& rng);

/// f(x) = (1/m) sum_i log(1 + exp(-y_i <w_i, x>)), evaluated via log1p with
/// the overflow-safe branch on the sign of the exponent.
double logreg_value(const LogRegData& data, const Vector& x);
Vector logreg_gradient(const LogRegData& data, const Vector& x);

/// lambda_max(W^T W) / (4m) by power iteration to relative tolerance 1e-10.
double logreg_lipschitz(const LogRegData& data);

/// f_star is left empty: no closed form. The harness estimates it with a
/// long exact-gradient run and labels the result as an estimate.
Objective logreg_objective(const LogRegData& data);

/// CSV with a header row, then one row per sample: label, n feature values.
void save_logreg_csv(const LogRegData& data, const std::string& path);

}  // namespace plgd
