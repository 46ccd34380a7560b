#include "plgd/solvers.hpp"

#include <cmath>

#include "plgd/errors.hpp"

namespace plgd {

namespace {
const double kSqrt6 = std::sqrt(6.0);
}

double StopRule::threshold(double delta) const {
    switch (kind) {
        case StopRuleKind::ConstRule:
            return kSqrt6 * delta;
        case StopRuleKind::AdaptiveRule:
            return 2.0 * delta;
        case StopRuleKind::None:
            break;
    }
    return -1.0;  // unreachable by any nonnegative norm
}

bool StopRule::triggered(double tilde_grad_norm, double delta) const {
    if (kind == StopRuleKind::None) return false;
    return tilde_grad_norm <= threshold(delta);
}

bool check_stop_const(const Vector& tilde_grad, double delta) {
    return tilde_grad.norm() <= kSqrt6 * delta;
}

bool check_stop_adaptive(const Vector& tilde_grad, double delta) {
    return tilde_grad.norm() <= 2.0 * delta;
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::RuleTriggered: return "rule-triggered";
        case StopReason::MaxIters: return "max-iters";
        case StopReason::GradientOverflow: return "gradient-overflow";
    }
    return "unknown";
}

std::int64_t RunResult::total_inner_evals() const {
    std::int64_t total = 0;
    for (const auto& r : records) total += r.inner_evals;
    return total;
}

namespace {

struct QueryCounters {
    std::int64_t grad0;
    std::int64_t value0;
    explicit QueryCounters(const InexactOracle& oracle)
        : grad0(oracle.grad_queries()), value0(oracle.value_queries()) {}
    void finish(const InexactOracle& oracle, RunResult& out) const {
        out.total_grad_queries = oracle.grad_queries() - grad0;
        out.total_value_queries = oracle.value_queries() - value0;
    }
};

void check_start(const Vector& x0) {
    if (x0.size() == 0) throw InvalidConfigError("solver: empty starting point");
    if (!x0.allFinite()) throw InvalidConfigError("solver: non-finite starting point");
}

}  // namespace

RunResult run_const_step_gd(InexactOracle& oracle, const ConstStepConfig& cfg) {
    if (!(cfg.L > 0.0)) throw InvalidConfigError("run_const_step_gd: L must be positive");
    check_start(cfg.x0);

    const Objective& obj = oracle.objective();
    const double delta = oracle.delta();
    const QueryCounters counters(oracle);

    RunResult out;
    Vector x = cfg.x0;
    for (std::int64_t k = 0;; ++k) {
        Vector g_exact;
        Vector g_tilde;
        double f = 0.0;
        try {
            g_tilde = oracle.gradient(x, &g_exact);
            f = obj.value(x);
        } catch (const NumericOverflowError&) {
            out.stop_reason = StopReason::GradientOverflow;
            out.x_hat = x;
            counters.finish(oracle, out);
            return out;
        }
        if (!std::isfinite(f)) {
            out.stop_reason = StopReason::GradientOverflow;
            out.x_hat = x;
            counters.finish(oracle, out);
            return out;
        }

        IterationRecord rec;
        rec.k = k;
        rec.f_gap = obj.gap(f);
        rec.exact_grad_norm = g_exact.norm();
        rec.tilde_grad_norm = g_tilde.norm();
        rec.dist_from_x0 = (x - cfg.x0).norm();
        out.records.push_back(rec);
        if (cfg.record_trajectory) out.trajectory.push_back(x);

        if (cfg.stop.triggered(rec.tilde_grad_norm, delta)) {
            out.stop_reason = StopReason::RuleTriggered;
            out.x_hat = x;
            break;
        }
        if (k >= cfg.stop.max_iters) {
            out.stop_reason = StopReason::MaxIters;
            out.x_hat = x;
            break;
        }

        Vector next = x - (1.0 / cfg.L) * g_tilde;
        if (!next.allFinite()) {
            out.stop_reason = StopReason::GradientOverflow;
            out.x_hat = x;  // last finite iterate
            break;
        }
        x = std::move(next);
    }
    counters.finish(oracle, out);
    return out;
}

RunResult run_adaptive_gd(InexactOracle& oracle, const AdaptiveConfig& cfg) {
    if (cfg.L_min < 0.0) throw InvalidConfigError("run_adaptive_gd: L_min must be >= 0");
    if (!(cfg.L0 > 0.0) || cfg.L0 < cfg.L_min)
        throw InvalidConfigError("run_adaptive_gd: need L0 > 0 and L0 >= L_min");
    check_start(cfg.x0);

    const Objective& obj = oracle.objective();
    const double delta = oracle.delta();
    const double small_delta = oracle.small_delta();
    const double trial_cap = std::ldexp(std::max(cfg.L0, 1.0), 32);
    const QueryCounters counters(oracle);

    RunResult out;
    Vector x = cfg.x0;
    double L_cur = cfg.L0;  // first trial value for the upcoming iteration
    for (std::int64_t k = 0;; ++k) {
        Vector g_exact;
        Vector g_tilde;
        double f = 0.0;
        try {
            g_tilde = oracle.gradient(x, &g_exact);
            f = obj.value(x);
        } catch (const NumericOverflowError&) {
            out.stop_reason = StopReason::GradientOverflow;
            out.x_hat = x;
            counters.finish(oracle, out);
            return out;
        }
        if (!std::isfinite(f)) {
            out.stop_reason = StopReason::GradientOverflow;
            out.x_hat = x;
            counters.finish(oracle, out);
            return out;
        }

        IterationRecord rec;
        rec.k = k;
        rec.f_gap = obj.gap(f);
        rec.exact_grad_norm = g_exact.norm();
        rec.tilde_grad_norm = g_tilde.norm();
        rec.dist_from_x0 = (x - cfg.x0).norm();

        if (cfg.stop.triggered(rec.tilde_grad_norm, delta)) {
            out.records.push_back(rec);
            if (cfg.record_trajectory) out.trajectory.push_back(x);
            out.stop_reason = StopReason::RuleTriggered;
            out.x_hat = x;
            break;
        }
        if (k >= cfg.stop.max_iters) {
            out.records.push_back(rec);
            if (cfg.record_trajectory) out.trajectory.push_back(x);
            out.stop_reason = StopReason::MaxIters;
            out.x_hat = x;
            break;
        }

        // Committed noisy value at x_k, shared by all trials this iteration.
        const double ft_x = oracle.value(x);
        double L_try = L_cur;
        int trials = 0;
        Vector candidate;
        while (true) {
            if (L_try > trial_cap)
                throw InnerLoopDivergenceError(
                    "run_adaptive_gd: acceptance test kept failing up to the trial cap");
            ++trials;
            candidate = x - g_tilde / (2.0 * L_try);
            const Vector dx = candidate - x;
            const double ft_c = oracle.value(candidate);
            const double rhs = ft_x + g_tilde.dot(dx) + L_try * dx.squaredNorm() +
                               delta * delta / (2.0 * L_try) + 2.0 * small_delta;
            // Non-finite candidates or values fail the comparison and double L.
            if (candidate.allFinite() && ft_c <= rhs) break;
            L_try *= 2.0;
        }

        rec.L_k = L_try;
        rec.inner_evals = trials;
        out.records.push_back(rec);
        if (cfg.record_trajectory) out.trajectory.push_back(x);

        x = std::move(candidate);
        L_cur = std::max(L_try / 2.0, cfg.L_min);
    }
    counters.finish(oracle, out);
    return out;
}

}  // namespace plgd
