#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plgd/objective.hpp"

namespace plgd {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Analytic gradient vs central finite differences at `points` random
/// points, relative error <= 1e-6 with step 1e-6 max(1, ||x||).
CheckResult check_gradient_consistency(const std::string& name, const Objective& objective,
                                       std::uint64_t seed, int points, double box = 2.0);

/// The full self-check suite behind the `validate` subcommand: gradient
/// consistency for every built-in problem, oracle error bounds, sphere
/// sampler norms, determinism replay, minor recursion vs dense
/// determinants, and certificate replays on seeded solver runs.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

}  // namespace plgd
