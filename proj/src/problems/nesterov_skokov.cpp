#include "plgd/problems/nesterov_skokov.hpp"

#include "plgd/errors.hpp"

namespace plgd {

namespace {
void check_dim(const NesterovSkokovProblem& p, const Vector& x) {
    if (p.n < 2) throw InvalidConfigError("NesterovSkokovProblem: n must be >= 2");
    if (x.size() != p.n) throw InvalidConfigError("NesterovSkokovProblem: dimension mismatch");
}
}  // namespace

double NesterovSkokovProblem::value(const Vector& x) const {
    check_dim(*this, x);
    const double s = 0.5 * (x[0] - 1.0);
    double f = s * s;
    for (int i = 0; i + 1 < n; ++i) {
        const double r = x[i + 1] - 2.0 * x[i] * x[i] + 1.0;
        f += r * r;
    }
    return f;
}

Vector NesterovSkokovProblem::gradient(const Vector& x) const {
    check_dim(*this, x);
    Vector g = Vector::Zero(n);
    g[0] = 0.5 * (x[0] - 1.0);  // 2 * g1 * dg1/dx1 with g1 = (x1-1)/2
    for (int i = 0; i + 1 < n; ++i) {
        const double r = x[i + 1] - 2.0 * x[i] * x[i] + 1.0;
        g[i] += 2.0 * r * (-4.0 * x[i]);
        g[i + 1] += 2.0 * r;
    }
    return g;
}

Objective NesterovSkokovProblem::objective() const {
    Objective obj;
    obj.dim = n;
    obj.value = [p = *this](const Vector& x) { return p.value(x); };
    obj.gradient = [p = *this](const Vector& x) { return p.gradient(x); };
    obj.f_star = 0.0;
    return obj;
}

std::vector<double> NesterovSkokovProblem::minor_sequence(const Vector& x) const {
    check_dim(*this, x);
    std::vector<double> minors(n);
    minors[0] = 0.25;
    if (n >= 2) minors[1] = 0.25;
    for (int j = 2; j < n; ++j) {
        const double t = 16.0 * x[j - 1] * x[j - 1];
        // difference form of (t+1) f_{j-1} - t f_{j-2}: subtracting the two
        // near-equal products directly loses all precision once t is large
        minors[j] = minors[j - 1] + t * (minors[j - 1] - minors[j - 2]);
    }
    return minors;
}

}  // namespace plgd
