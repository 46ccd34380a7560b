#pragma once

#include <cstdint>

#include "plgd/noise.hpp"
#include "plgd/objective.hpp"
#include "plgd/rng.hpp"

namespace plgd {

/// First-order oracle with additive inexactness: gradient queries return
/// grad f(x) + delta * u with ||u|| <= 1, value queries return
/// f(x) + small_delta * eta with eta uniform on [-1, 1]. The wrapped
/// objective and bounds are immutable; only the random cursor advances,
/// so one oracle instance belongs to one logical thread.
class InexactOracle {
public:
    InexactOracle(Objective objective, double delta, double small_delta, NoiseModel noise,
                  RngStream rng);

    /// Inexact gradient query. Throws NumericOverflowError if the exact
    /// gradient is non-finite at x.
    Vector gradient(const Vector& x);

    /// Same query, additionally reporting the exact gradient that was
    /// perturbed (solver instrumentation; costs nothing extra).
    Vector gradient(const Vector& x, Vector* exact_out);

    /// Inexact value query.
    double value(const Vector& x);

    const Objective& objective() const { return objective_; }
    double delta() const { return delta_; }
    double small_delta() const { return small_delta_; }
    const NoiseModel& noise() const { return noise_; }

    std::int64_t grad_queries() const { return grad_queries_; }
    std::int64_t value_queries() const { return value_queries_; }

private:
    Objective objective_;
    double delta_;
    double small_delta_;
    NoiseModel noise_;
    RngStream rng_;
    std::int64_t grad_queries_ = 0;
    std::int64_t value_queries_ = 0;
};

}  // namespace plgd
