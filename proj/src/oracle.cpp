#include "plgd/oracle.hpp"

#include <utility>

#include "plgd/errors.hpp"

namespace plgd {

InexactOracle::InexactOracle(Objective objective, double delta, double small_delta,
                             NoiseModel noise, RngStream rng)
    : objective_(std::move(objective)),
      delta_(delta),
      small_delta_(small_delta),
      noise_(noise),
      rng_(rng) {
    if (delta_ < 0.0 || small_delta_ < 0.0)
        throw InvalidConfigError("InexactOracle: error bounds must be nonnegative");
}

Vector InexactOracle::gradient(const Vector& x) { return gradient(x, nullptr); }

Vector InexactOracle::gradient(const Vector& x, Vector* exact_out) {
    ++grad_queries_;
    Vector g = objective_.gradient(x);
    if (!g.allFinite()) throw NumericOverflowError("gradient overflow", x);
    if (exact_out != nullptr) *exact_out = g;
    if (noise_.kind() == NoiseKind::None) return g;
    const Vector u = noise_.direction(x, g, rng_);
    return g + delta_ * u;
}

double InexactOracle::value(const Vector& x) {
    ++value_queries_;
    const double f = objective_.value(x);
    if (small_delta_ == 0.0) return f;
    return f + small_delta_ * rng_.uniform(-1.0, 1.0);
}

}  // namespace plgd
