#include "plgd/objective.hpp"

#include <algorithm>

#include "plgd/errors.hpp"

namespace plgd {

Vector finite_diff_gradient(const Objective& objective, const Vector& x, double h) {
    if (h <= 0.0) throw InvalidConfigError("finite_diff_gradient: h must be positive");
    Vector g(x.size());
    Vector probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double fp = objective.value(probe);
        probe[i] = x[i] - h;
        const double fm = objective.value(probe);
        probe[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

double finite_diff_step(const Vector& x) { return 1e-6 * std::max(1.0, x.norm()); }

}  // namespace plgd
