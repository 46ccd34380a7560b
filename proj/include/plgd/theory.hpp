#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plgd/objective.hpp"
#include "plgd/solvers.hpp"

namespace plgd {

/// A budget formula requires delta > 0 (with exact gradients only the
/// rule-based stop terminates the analysis).
struct InfiniteBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// The requested bound needs a constant (mu, L_min) that was not supplied.
struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// The bound's own premise fails for these inputs (e.g. delta^2 <= 16 L small_delta).
struct PremiseViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constants the closed-form budgets and distance bounds are evaluated at.
struct TheoryInputs {
    double L = 1.0;
    std::optional<double> mu;
    double delta = 0.0;
    double small_delta = 0.0;
    double gap0 = 0.0;  // f(x0) - f_star
    std::optional<double> L_min;

    std::optional<double> gamma() const {
        if (!L_min) return std::nullopt;
        return L / *L_min;
    }
};

/// ceil((L/mu) ln(mu gap0 / (6 delta^2))), clamped at 0 when the log
/// argument is <= 1. Iterations sufficient for the constant-step method to
/// reach the 7 delta^2 / mu level.
std::int64_t budget_const(const TheoryInputs& inp);

/// 2 L gap0 / delta^2: strict upper bound on the first iteration at which
/// the constant-step rule triggers, PL not required.
double budget_no_pl(const TheoryInputs& inp);

/// (7 delta^2 / mu, 5 delta^2 / mu): function-gap guarantees at the
/// constant-step and adaptive stopping rules respectively.
std::pair<double, double> gap_guarantees(const TheoryInputs& inp);

/// (2 delta/mu) sqrt(1 + L/mu) ceil(ln(mu gap0 / (6 delta^2))) + 4 sqrt(L gap0)/mu,
/// ceiling term clamped at 0.
double dist_bound_const(const TheoryInputs& inp);

/// mu-free drift bounds after N steps:
///   (a) 2 N delta / L + 2 sqrt(N) sqrt(gap0 / L)
///   (b) (4 + 2 sqrt(2)) gap0 / delta
/// (b) equals (a) evaluated at N = budget_no_pl, hence N is real-valued.
std::pair<double, double> dist_bounds_no_mu(const TheoryInputs& inp, double N);

/// ceil((8 L / mu) ln(mu gap0 / delta^2)), clamped at 0. Natural log.
std::int64_t budget_adaptive(const TheoryInputs& inp);

/// 2 L gap0 / (delta^2 - 16 L small_delta); requires delta^2 > 16 L small_delta.
double budget_adaptive_delta(const TheoryInputs& inp);

/// Adaptive drift bounds with gamma = L / L_min:
///   first:  8 (delta/mu) sqrt(gamma^2/2 + 4 gamma L/mu) ln(mu gap0/delta^2)
///           + 16 sqrt(gamma L gap0)/mu   (log term clamped at 0)
///   second: N delta sqrt(1/(2 L_min^2) + 4/(mu L_min))
///           + 16 sqrt(L/L_min) sqrt(L gap0)/mu   at N = budget_adaptive.
std::pair<double, double> dist_bound_adaptive(const TheoryInputs& inp);

/// Every bound above that is applicable for the given inputs; fields stay
/// empty when a needed constant is missing or a premise fails.
struct BoundsReport {
    std::optional<std::int64_t> n_star_const;
    std::optional<double> n_cap_no_pl;
    std::optional<double> gap_guarantee_const;
    std::optional<double> dist_bound_const;
    std::optional<double> dist_bound_no_mu_a;
    std::optional<double> dist_bound_no_mu_b;
    std::optional<std::int64_t> n_star_adaptive;
    std::optional<double> n_cap_adaptive_delta;
    std::optional<double> gap_guarantee_adaptive;
    std::optional<double> dist_bound_adaptive;
    // N-dependent adaptive drift bound, valid for any positive L_min.
    std::optional<double> dist_bound_adaptive_n;

    nlohmann::json to_json() const;
};

/// drift_steps, when given, is the N at which the N-dependent drift bound
/// (a) is evaluated; it defaults to budget_no_pl.
BoundsReport make_bounds_report(const TheoryInputs& inp,
                                std::optional<double> drift_steps = std::nullopt);

enum class SolverMode { ConstStep, Adaptive };

struct CertificateCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    double worst_violation = 0.0;      // max over iterations of lhs - rhs, floored at 0
    std::int64_t worst_index = -1;     // iterate index of the worst violation
    std::int64_t checked_count = 0;
    std::vector<std::int64_t> failing_indices;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;

    bool pass() const;
    double worst_violation() const;
    nlohmann::json to_json() const;
};

/// Replays a recorded trajectory against the per-iteration inequalities the
/// analysis guarantees, recomputing exact f (and exact gradient norms where
/// needed) from the objective. Noisy quantities (||g~||, L_k) come from the
/// records; delta, small_delta and the constants come from `inp`. Each
/// inequality is tested with additive tolerance 1e-10 (1 + |f(x_k)|).
/// Requires the run to have been recorded with trajectory storage on.
CertificateReport verify_certificates(const RunResult& run, const Objective& objective,
                                      const TheoryInputs& inp, SolverMode mode);

}  // namespace plgd
