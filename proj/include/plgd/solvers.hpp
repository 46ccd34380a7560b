#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "plgd/oracle.hpp"

namespace plgd {

/// Early-stopping rules on the observed inexact gradient norm. The
/// threshold is a fixed multiple of the oracle's delta: sqrt(6) for the
/// constant-step rule, 2 for the adaptive-method rule. It is recomputed
/// from delta at every check, never cached.
enum class StopRuleKind { None, ConstRule, AdaptiveRule };

struct StopRule {
    StopRuleKind kind = StopRuleKind::None;
    std::int64_t max_iters = 1000000;  // safety cap for non-stopping configurations

    static StopRule none(std::int64_t cap = 1000000) { return {StopRuleKind::None, cap}; }
    static StopRule const_rule(std::int64_t cap = 1000000) { return {StopRuleKind::ConstRule, cap}; }
    static StopRule adaptive_rule(std::int64_t cap = 1000000) {
        return {StopRuleKind::AdaptiveRule, cap};
    }

    double threshold(double delta) const;
    bool triggered(double tilde_grad_norm, double delta) const;
};

/// ||tilde_grad|| <= sqrt(6) * delta (inclusive).
bool check_stop_const(const Vector& tilde_grad, double delta);
/// ||tilde_grad|| <= 2 * delta (inclusive).
bool check_stop_adaptive(const Vector& tilde_grad, double delta);

struct ConstStepConfig {
    double L = 1.0;  // step size 1/L
    Vector x0;
    StopRule stop;
    bool record_trajectory = true;
};

struct AdaptiveConfig {
    double L_min = 0.0;
    double L0 = 1.0;  // initial smoothness estimate, >= L_min
    Vector x0;
    StopRule stop;
    bool record_trajectory = true;
};

struct IterationRecord {
    std::int64_t k = 0;
    double f_gap = 0.0;  // exact f(x_k) - f_star when known, else raw f(x_k)
    double exact_grad_norm = 0.0;
    double tilde_grad_norm = 0.0;
    double dist_from_x0 = 0.0;
    // Adaptive solver only; NaN / 0 on constant-step records and on the
    // final record of a run that stopped before stepping.
    double L_k = std::numeric_limits<double>::quiet_NaN();
    int inner_evals = 0;
};

enum class StopReason { RuleTriggered, MaxIters, GradientOverflow };

const char* to_string(StopReason reason);

struct RunResult {
    std::vector<IterationRecord> records;
    StopReason stop_reason = StopReason::MaxIters;
    Vector x_hat;
    std::int64_t total_value_queries = 0;
    std::int64_t total_grad_queries = 0;
    // Iterates aligned with records; empty when trajectory recording is off.
    std::vector<Vector> trajectory;

    std::int64_t stop_index() const { return records.empty() ? 0 : records.back().k; }
    /// Total candidate trials, I(N) in the adaptive call-count bound.
    std::int64_t total_inner_evals() const;
};

/// x_{k+1} = x_k - (1/L) g~(x_k), with the stop rule evaluated on the same
/// g~(x_k) before the step is taken (x_hat = x_N at first trigger).
RunResult run_const_step_gd(InexactOracle& oracle, const ConstStepConfig& cfg);

/// Doubling/halving step-size adaptation: candidate x_{k+1} = x_k -
/// g~(x_k)/(2 L_k) is accepted once
///   f~(x_{k+1}) <= f~(x_k) + <g~(x_k), x_{k+1}-x_k> + L_k ||x_{k+1}-x_k||^2
///                  + delta^2/(2 L_k) + 2 small_delta,
/// doubling L_k on failure; after acceptance L_{k+1} = max(L_k/2, L_min).
/// f~(x_k) is queried once per outer iteration and reused across trials.
RunResult run_adaptive_gd(InexactOracle& oracle, const AdaptiveConfig& cfg);

}  // namespace plgd
