#include "plgd/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "plgd/errors.hpp"

namespace plgd {

namespace {

double require_mu(const TheoryInputs& inp, const char* who) {
    if (!inp.mu || !(*inp.mu > 0.0))
        throw NotApplicableError(std::string(who) + ": mu is required");
    return *inp.mu;
}

void require_delta(const TheoryInputs& inp, const char* who) {
    if (!(inp.delta > 0.0))
        throw InfiniteBudgetError(std::string(who) +
                                  ": delta = 0 has no finite budget; use the stopping rule");
}

std::int64_t clamped_ceil(double v) {
    if (!(v > 0.0)) return 0;
    return static_cast<std::int64_t>(std::ceil(v));
}

}  // namespace

std::int64_t budget_const(const TheoryInputs& inp) {
    require_delta(inp, "budget_const");
    const double mu = require_mu(inp, "budget_const");
    const double arg = mu * inp.gap0 / (6.0 * inp.delta * inp.delta);
    if (arg <= 1.0) return 0;
    return clamped_ceil((inp.L / mu) * std::log(arg));
}

double budget_no_pl(const TheoryInputs& inp) {
    require_delta(inp, "budget_no_pl");
    return 2.0 * inp.L * inp.gap0 / (inp.delta * inp.delta);
}

std::pair<double, double> gap_guarantees(const TheoryInputs& inp) {
    const double mu = require_mu(inp, "gap_guarantees");
    const double d2 = inp.delta * inp.delta;
    return {7.0 * d2 / mu, 5.0 * d2 / mu};
}

double dist_bound_const(const TheoryInputs& inp) {
    require_delta(inp, "dist_bound_const");
    const double mu = require_mu(inp, "dist_bound_const");
    const double arg = mu * inp.gap0 / (6.0 * inp.delta * inp.delta);
    const double log_ceil = arg > 1.0 ? std::ceil(std::log(arg)) : 0.0;
    return (2.0 * inp.delta / mu) * std::sqrt(1.0 + inp.L / mu) * log_ceil +
           4.0 * std::sqrt(inp.L * inp.gap0) / mu;
}

std::pair<double, double> dist_bounds_no_mu(const TheoryInputs& inp, double N) {
    if (N < 0.0) throw InvalidConfigError("dist_bounds_no_mu: N must be >= 0");
    const double a = 2.0 * N * inp.delta / inp.L + 2.0 * std::sqrt(N) * std::sqrt(inp.gap0 / inp.L);
    double b = std::numeric_limits<double>::infinity();
    if (inp.delta > 0.0) b = (4.0 + 2.0 * std::sqrt(2.0)) * inp.gap0 / inp.delta;
    return {a, b};
}

std::int64_t budget_adaptive(const TheoryInputs& inp) {
    require_delta(inp, "budget_adaptive");
    const double mu = require_mu(inp, "budget_adaptive");
    const double arg = mu * inp.gap0 / (inp.delta * inp.delta);
    if (arg <= 1.0) return 0;
    return clamped_ceil((8.0 * inp.L / mu) * std::log(arg));
}

double budget_adaptive_delta(const TheoryInputs& inp) {
    require_delta(inp, "budget_adaptive_delta");
    const double denom = inp.delta * inp.delta - 16.0 * inp.L * inp.small_delta;
    if (!(denom > 0.0))
        throw PremiseViolatedError("budget_adaptive_delta: requires delta^2 > 16 L small_delta");
    return 2.0 * inp.L * inp.gap0 / denom;
}

std::pair<double, double> dist_bound_adaptive(const TheoryInputs& inp) {
    require_delta(inp, "dist_bound_adaptive");
    const double mu = require_mu(inp, "dist_bound_adaptive");
    if (!inp.L_min || !(*inp.L_min > 0.0))
        throw NotApplicableError("dist_bound_adaptive: L_min is required");
    const double l_min = *inp.L_min;
    const double gamma = inp.L / l_min;
    const double arg = mu * inp.gap0 / (inp.delta * inp.delta);
    const double log_term = arg > 1.0 ? std::log(arg) : 0.0;
    const double first =
        8.0 * (inp.delta / mu) * std::sqrt(0.5 * gamma * gamma + 4.0 * gamma * inp.L / mu) *
            log_term +
        16.0 * std::sqrt(gamma * inp.L * inp.gap0) / mu;
    const double n = static_cast<double>(budget_adaptive(inp));
    const double second =
        n * inp.delta * std::sqrt(1.0 / (2.0 * l_min * l_min) + 4.0 / (mu * l_min)) +
        16.0 * std::sqrt(inp.L / l_min) * std::sqrt(inp.L * inp.gap0) / mu;
    return {first, second};
}

BoundsReport make_bounds_report(const TheoryInputs& inp, std::optional<double> drift_steps) {
    BoundsReport report;
    const auto tryset = [](auto& field, auto&& fn) {
        try {
            field = fn();
        } catch (const NotApplicableError&) {
        } catch (const InfiniteBudgetError&) {
        } catch (const PremiseViolatedError&) {
        }
    };
    tryset(report.n_star_const, [&] { return budget_const(inp); });
    tryset(report.n_cap_no_pl, [&] { return budget_no_pl(inp); });
    tryset(report.gap_guarantee_const, [&] { return gap_guarantees(inp).first; });
    tryset(report.gap_guarantee_adaptive, [&] { return gap_guarantees(inp).second; });
    tryset(report.dist_bound_const, [&] { return dist_bound_const(inp); });
    tryset(report.n_star_adaptive, [&] { return budget_adaptive(inp); });
    tryset(report.n_cap_adaptive_delta, [&] { return budget_adaptive_delta(inp); });
    tryset(report.dist_bound_adaptive, [&] { return dist_bound_adaptive(inp).first; });
    tryset(report.dist_bound_adaptive_n, [&] { return dist_bound_adaptive(inp).second; });
    std::optional<double> n = drift_steps;
    if (!n && inp.delta > 0.0) n = budget_no_pl(inp);
    if (n) {
        tryset(report.dist_bound_no_mu_a, [&] { return dist_bounds_no_mu(inp, *n).first; });
        if (inp.delta > 0.0)
            tryset(report.dist_bound_no_mu_b, [&] { return dist_bounds_no_mu(inp, *n).second; });
    }
    return report;
}

nlohmann::json BoundsReport::to_json() const {
    nlohmann::json j;
    const auto put = [&j](const char* key, const auto& field) {
        if (field)
            j[key] = *field;
        else
            j[key] = nullptr;
    };
    put("n_star_const", n_star_const);
    put("n_cap_no_pl", n_cap_no_pl);
    put("gap_guarantee_const", gap_guarantee_const);
    put("dist_bound_const", dist_bound_const);
    put("dist_bound_no_mu_a", dist_bound_no_mu_a);
    put("dist_bound_no_mu_b", dist_bound_no_mu_b);
    put("n_star_adaptive", n_star_adaptive);
    put("n_cap_adaptive_delta", n_cap_adaptive_delta);
    put("gap_guarantee_adaptive", gap_guarantee_adaptive);
    put("dist_bound_adaptive", dist_bound_adaptive);
    put("dist_bound_adaptive_n", dist_bound_adaptive_n);
    return j;
}

bool CertificateReport::pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.passed) return false;
    return true;
}

double CertificateReport::worst_violation() const {
    double worst = 0.0;
    for (const auto& c : checks)
        if (c.applicable) worst = std::max(worst, c.worst_violation);
    return worst;
}

nlohmann::json CertificateReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass();
    j["worst_violation"] = worst_violation();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["applicable"] = c.applicable;
        jc["passed"] = c.passed;
        jc["worst_violation"] = c.worst_violation;
        jc["worst_index"] = c.worst_index;
        jc["checked_count"] = c.checked_count;
        jc["failing_indices"] = c.failing_indices;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j;
}

namespace {

class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

    /// Tests lhs <= rhs + tol; accumulates the worst untolerated excess.
    void test(std::int64_t index, double lhs, double rhs, double tol) {
        check_.applicable = true;
        ++check_.checked_count;
        const double violation = lhs - rhs;
        if (violation > check_.worst_violation) {
            check_.worst_violation = violation;
            check_.worst_index = index;
        }
        if (!(lhs <= rhs + tol)) {
            check_.passed = false;
            if (check_.failing_indices.size() < 64) check_.failing_indices.push_back(index);
        }
    }

    CertificateCheck finish() {
        check_.worst_violation = std::max(check_.worst_violation, 0.0);
        return std::move(check_);
    }

private:
    CertificateCheck check_;
};

double tolerance_at(double f_value) { return 1e-10 * (1.0 + std::abs(f_value)); }

}  // namespace

CertificateReport verify_certificates(const RunResult& run, const Objective& objective,
                                      const TheoryInputs& inp, SolverMode mode) {
    if (run.trajectory.size() != run.records.size() || run.records.empty())
        throw InvalidConfigError(
            "verify_certificates: run must be recorded with trajectory storage enabled");
    if (run.trajectory.front().size() != objective.dim)
        throw InvalidConfigError("verify_certificates: trajectory/problem dimension mismatch");

    const std::size_t count = run.trajectory.size();
    std::vector<double> f(count);
    for (std::size_t i = 0; i < count; ++i) f[i] = objective.value(run.trajectory[i]);

    const double delta = inp.delta;
    const double small_delta = inp.small_delta;
    CertificateReport report;

    if (mode == SolverMode::ConstStep) {
        const double L = inp.L;

        CheckBuilder descent("const-step-descent");
        for (std::size_t k = 0; k + 1 < count; ++k) {
            const double t = run.records[k].tilde_grad_norm;
            descent.test(static_cast<std::int64_t>(k), f[k + 1] - f[k],
                         delta * delta / L - t * t / (4.0 * L), tolerance_at(f[k]));
        }
        report.checks.push_back(descent.finish());

        CheckBuilder decay("const-step-geometric-decay");
        if (objective.f_star && inp.mu && *inp.mu > 0.0) {
            const double mu = *inp.mu;
            const double gap0 = f[0] - *objective.f_star;
            const double rate = 1.0 - mu / L;
            double pow_k = 1.0;
            for (std::size_t k = 0; k < count; ++k) {
                decay.test(static_cast<std::int64_t>(k), f[k] - *objective.f_star,
                           pow_k * gap0 + delta * delta / (2.0 * mu), tolerance_at(f[k]));
                pow_k *= rate;
            }
        }
        report.checks.push_back(decay.finish());

        CheckBuilder grad_sum("min-grad-norm-sum");
        if (objective.f_star) {
            const double gap0 = f[0] - *objective.f_star;
            double min_norm = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k + 1 < count; ++k) {
                min_norm = std::min(min_norm, objective.gradient(run.trajectory[k]).norm());
                const double n_steps = static_cast<double>(k + 1);
                grad_sum.test(static_cast<std::int64_t>(k + 1), min_norm,
                              delta + std::sqrt(2.0 * L * gap0 / n_steps), tolerance_at(f[k]));
            }
        }
        report.checks.push_back(grad_sum.finish());
    } else {
        CheckBuilder descent("adaptive-step-descent");
        for (std::size_t k = 0; k + 1 < count; ++k) {
            const double t = run.records[k].tilde_grad_norm;
            const double L_k = run.records[k].L_k;
            descent.test(static_cast<std::int64_t>(k), f[k + 1] - f[k],
                         delta * delta / (2.0 * L_k) - t * t / (4.0 * L_k) + 4.0 * small_delta,
                         tolerance_at(f[k]));
        }
        report.checks.push_back(descent.finish());

        CheckBuilder decay("adaptive-geometric-decay");
        if (objective.f_star && inp.mu && *inp.mu > 0.0) {
            const double mu = *inp.mu;
            const double gap0 = f[0] - *objective.f_star;
            const double floor = 2.0 * delta * delta / mu + 32.0 * inp.L * small_delta / mu;
            // The decay product needs every factor nonnegative, i.e. all
            // accepted L_k >= mu/4; skip the check otherwise.
            bool premise_ok = true;
            for (std::size_t k = 0; k + 1 < count; ++k)
                premise_ok = premise_ok && run.records[k].L_k >= mu / 4.0;
            if (premise_ok) {
                double prod = 1.0;
                for (std::size_t k = 0; k + 1 < count; ++k) {
                    prod *= 1.0 - mu / (4.0 * run.records[k].L_k);
                    decay.test(static_cast<std::int64_t>(k + 1), f[k + 1] - *objective.f_star,
                               prod * gap0 + floor, tolerance_at(f[k + 1]));
                }
            }
        }
        report.checks.push_back(decay.finish());
    }
    return report;
}

}  // namespace plgd
