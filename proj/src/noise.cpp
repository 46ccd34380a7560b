#include "plgd/noise.hpp"

#include "plgd/errors.hpp"

namespace plgd {

namespace {
constexpr double kDegenerateNorm = 1e-300;
}

Eigen::VectorXd sample_unit_sphere(Eigen::Index dim, RngStream& rng) {
    if (dim < 1) throw InvalidConfigError("sample_unit_sphere: dim must be >= 1");
    Eigen::VectorXd g = rng.gaussian_vector(dim);
    double n = g.norm();
    while (n < kDegenerateNorm) {
        g = rng.gaussian_vector(dim);
        n = g.norm();
    }
    return g / n;
}

NoiseModel NoiseModel::constant(const Eigen::VectorXd& v) {
    const double n = v.norm();
    if (!(n > 0.0)) throw InvalidConfigError("NoiseModel::constant: zero direction vector");
    NoiseModel m(NoiseKind::ConstantVector);
    m.v_ = v / n;
    return m;
}

Eigen::VectorXd NoiseModel::direction(const Eigen::VectorXd& x, const Eigen::VectorXd& grad,
                                      RngStream& rng) const {
    switch (kind_) {
        case NoiseKind::None:
            return Eigen::VectorXd::Zero(x.size());
        case NoiseKind::RandomSphere:
            return sample_unit_sphere(x.size(), rng);
        case NoiseKind::Antigradient: {
            const double n = grad.norm();
            if (n < kDegenerateNorm) return Eigen::VectorXd::Zero(x.size());
            return -grad / n;
        }
        case NoiseKind::ConstantVector:
            if (v_.size() != x.size())
                throw InvalidConfigError("NoiseModel: constant vector dimension mismatch");
            return v_;
        case NoiseKind::FirstComponentBias: {
            Eigen::VectorXd u = Eigen::VectorXd::Zero(x.size());
            u[0] = -1.0;
            return u;
        }
    }
    return Eigen::VectorXd::Zero(x.size());
}

}  // namespace plgd
