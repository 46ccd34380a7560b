#include "plgd/problems/rosenbrock.hpp"

#include "plgd/errors.hpp"

namespace plgd {

double rosenbrock_value(const Vector& x) {
    if (x.size() != 2) throw InvalidConfigError("rosenbrock: dimension must be 2");
    const double r = x[1] - x[0] * x[0];
    const double s = x[0] - 1.0;
    return 100.0 * r * r + s * s;
}

Vector rosenbrock_gradient(const Vector& x) {
    if (x.size() != 2) throw InvalidConfigError("rosenbrock: dimension must be 2");
    const double r = x[1] - x[0] * x[0];
    Vector g(2);
    g << -400.0 * x[0] * r + 2.0 * (x[0] - 1.0), 200.0 * r;
    return g;
}

Objective rosenbrock_objective() {
    Objective obj;
    obj.dim = 2;
    obj.value = [](const Vector& x) { return rosenbrock_value(x); };
    obj.gradient = [](const Vector& x) { return rosenbrock_gradient(x); };
    obj.f_star = 0.0;
    return obj;
}

}  // namespace plgd
