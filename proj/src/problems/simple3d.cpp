#include "plgd/problems/simple3d.hpp"

#include "plgd/errors.hpp"

namespace plgd {

double Simple3DProblem::value(const Vector& x) const {
    if (x.size() != 3) throw InvalidConfigError("Simple3DProblem: dimension must be 3");
    return L * x[0] * x[0] + mu * x[1] * x[1];
}

Vector Simple3DProblem::gradient(const Vector& x) const {
    if (x.size() != 3) throw InvalidConfigError("Simple3DProblem: dimension must be 3");
    Vector g(3);
    g << 2.0 * L * x[0], 2.0 * mu * x[1], 0.0;
    return g;
}

Objective Simple3DProblem::objective() const {
    Objective obj;
    obj.dim = 3;
    obj.value = [p = *this](const Vector& x) { return p.value(x); };
    obj.gradient = [p = *this](const Vector& x) { return p.gradient(x); };
    obj.f_star = 0.0;
    obj.lipschitz_L = 2.0 * L;
    obj.pl_mu = 2.0 * mu;
    return obj;
}

}  // namespace plgd
