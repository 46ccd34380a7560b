#pragma once

#include <Eigen/Core>

#include "plgd/rng.hpp"

namespace plgd {

/// Uniform sample from the unit sphere in R^dim (normalized Gaussian draw).
Eigen::VectorXd sample_unit_sphere(Eigen::Index dim, RngStream& rng);

enum class NoiseKind {
    None,                // zero perturbation (exact gradient)
    RandomSphere,        // fresh uniform unit vector per query
    Antigradient,        // -grad / ||grad||
    ConstantVector,      // fixed unit vector
    FirstComponentBias,  // -e1: only the first partial derivative is wrong
};

/// Rule producing the unit (or zero) perturbation direction at a query point.
/// Every emitted direction u satisfies ||u|| <= 1.
class NoiseModel {
public:
    static NoiseModel none() { return NoiseModel(NoiseKind::None); }
    static NoiseModel random_sphere() { return NoiseModel(NoiseKind::RandomSphere); }
    static NoiseModel antigradient() { return NoiseModel(NoiseKind::Antigradient); }
    static NoiseModel first_component_bias() { return NoiseModel(NoiseKind::FirstComponentBias); }
    /// Stores v / ||v||; rejects a zero vector.
    static NoiseModel constant(const Eigen::VectorXd& v);

    /// Direction at x given the exact gradient there. Degenerate cases
    /// (zero gradient under Antigradient) return the zero vector.
    Eigen::VectorXd direction(const Eigen::VectorXd& x, const Eigen::VectorXd& grad,
                              RngStream& rng) const;

    NoiseKind kind() const { return kind_; }
    const Eigen::VectorXd& constant_vector() const { return v_; }

private:
    explicit NoiseModel(NoiseKind kind) : kind_(kind) {}
    NoiseKind kind_;
    Eigen::VectorXd v_;
};

}  // namespace plgd
