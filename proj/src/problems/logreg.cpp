#include "plgd/problems/logreg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <Eigen/QR>

#include "plgd/errors.hpp"

namespace plgd {

namespace {

double sign_pos(double v) { return v >= 0.0 ? 1.0 : -1.0; }  // sign(0) -> +1

/// log(1 + exp(t)) without overflow for large |t|.
double log1p_exp(double t) {
    if (t > 0.0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

/// 1 / (1 + exp(-t)).
double logistic(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

}  // namespace

LogRegData generate_logreg_data(int n, int m, int k, RngStream& rng) {
    if (k < 1 || k > n || 2 * k > m)
        throw InvalidConfigError("generate_logreg_data: need 1 <= k <= min(n, m/2)");

    // Orthonormal basis W_B (n x k) from a Gaussian matrix.
    Eigen::MatrixXd gauss(n, k);
    for (int j = 0; j < k; ++j) gauss.col(j) = rng.gaussian_vector(n);
    Eigen::MatrixXd basis =
        Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ() * Eigen::MatrixXd::Identity(n, k);

    // Remaining samples are random combinations of the basis columns.
    const int extra = m - 2 * k;
    Eigen::MatrixXd combo(extra, k);
    for (int i = 0; i < extra; ++i)
        for (int j = 0; j < k; ++j) combo(i, j) = rng.normal();
    Eigen::MatrixXd tail = combo * basis.transpose();  // extra x n

    // Labels from a random reference vector; the first k labels are negated
    // in the duplicated block so a finite minimizer exists.
    const Eigen::VectorXd x_ref = rng.gaussian_vector(n);

    LogRegData data;
    data.k = k;
    data.W.resize(m, n);
    data.y.resize(m);
    for (int i = 0; i < k; ++i) {
        data.W.row(i) = basis.col(i).transpose();
        data.W.row(k + i) = basis.col(i).transpose();
        const double label = sign_pos(basis.col(i).dot(x_ref));
        data.y[i] = label;
        data.y[k + i] = -label;
    }
    for (int i = 0; i < extra; ++i) {
        data.W.row(2 * k + i) = tail.row(i);
        data.y[2 * k + i] = sign_pos(tail.row(i).dot(x_ref));
    }
    return data;
}

double logreg_value(const LogRegData& data, const Vector& x) {
    const Eigen::VectorXd margins = data.W * x;
    double sum = 0.0;
    for (int i = 0; i < data.m(); ++i) sum += log1p_exp(-data.y[i] * margins[i]);
    return sum / static_cast<double>(data.m());
}

Vector logreg_gradient(const LogRegData& data, const Vector& x) {
    const Eigen::VectorXd margins = data.W * x;
    Eigen::VectorXd coeff(data.m());
    for (int i = 0; i < data.m(); ++i)
        coeff[i] = -data.y[i] * logistic(-data.y[i] * margins[i]);
    return (data.W.transpose() * coeff) / static_cast<double>(data.m());
}

double logreg_lipschitz(const LogRegData& data) {
    // Power iteration on W^T W; the matrix has rank k >= 1 so the dominant
    // eigenvalue is positive and a random start almost surely has a
    // component along it.
    RngStream rng(0x9d2c5680u, 0);
    Eigen::VectorXd v = rng.gaussian_vector(data.n());
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 1000000; ++it) {
        Eigen::VectorXd w = data.W.transpose() * (data.W * v);
        const double next = v.dot(w);
        const double norm = w.norm();
        if (norm == 0.0) break;
        v = w / norm;
        if (it > 0 && std::abs(next - lambda) <= 1e-10 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda / (4.0 * static_cast<double>(data.m()));
}

Objective logreg_objective(const LogRegData& data) {
    Objective obj;
    obj.dim = data.n();
    obj.value = [data](const Vector& x) { return logreg_value(data, x); };
    obj.gradient = [data](const Vector& x) { return logreg_gradient(data, x); };
    obj.lipschitz_L = logreg_lipschitz(data);
    return obj;
}

void save_logreg_csv(const LogRegData& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidConfigError("save_logreg_csv: cannot open " + path);
    out << "label";
    for (int j = 0; j < data.n(); ++j) out << ",x" << j;
    out << "\n";
    char buf[40];
    for (int i = 0; i < data.m(); ++i) {
        out << (data.y[i] > 0 ? "1" : "-1");
        for (int j = 0; j < data.n(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", data.W(i, j));
            out << ',' << buf;
        }
        out << "\n";
    }
}

}  // namespace plgd
