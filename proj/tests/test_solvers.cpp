#include <cmath>
#include <limits>

#include <doctest.h>

#include "plgd/errors.hpp"
#include "plgd/problems/quadratic.hpp"
#include "plgd/problems/rosenbrock.hpp"
#include "plgd/problems/simple3d.hpp"
#include "plgd/solvers.hpp"

using namespace plgd;

namespace {

Objective scaled_square_1d(double d) {
    Objective obj;
    obj.dim = 1;
    obj.value = [d](const Vector& x) { return 0.5 * d * x[0] * x[0]; };
    obj.gradient = [d](const Vector& x) { return Vector::Constant(1, d * x[0]); };
    obj.f_star = 0.0;
    obj.lipschitz_L = d;
    obj.pl_mu = d;
    return obj;
}

Vector vec3(double a, double b, double c) {
    Vector v(3);
    v << a, b, c;
    return v;
}

}  // namespace

TEST_CASE("stop thresholds") {
    Vector g(2);
    SUBCASE("const rule") {
        g << 0.0, 0.0;
        CHECK(check_stop_const(g, 0.1));
        g << std::sqrt(6.0) * 0.1, 0.0;  // boundary is inclusive
        CHECK(check_stop_const(g, 0.1));
        g << 0.3, 0.0;  // 0.3 > sqrt(6)*0.1 = 0.2449...
        CHECK_FALSE(check_stop_const(g, 0.1));
    }
    SUBCASE("adaptive rule") {
        g << 0.0, 0.0;
        CHECK(check_stop_adaptive(g, 0.5));
        g << 1.0, 0.0;  // exactly 2 delta
        CHECK(check_stop_adaptive(g, 0.5));
        g << 1.005, 0.0;
        CHECK_FALSE(check_stop_adaptive(g, 0.5));
    }
    SUBCASE("rule object never fires when disabled") {
        const StopRule rule = StopRule::none();
        CHECK_FALSE(rule.triggered(0.0, 1.0));
    }
}

TEST_CASE("constant-step solver") {
    SUBCASE("one exact step solves the 1-D half-square") {
        InexactOracle oracle(scaled_square_1d(1.0), 0.0, 0.0, NoiseModel::none(), RngStream(50));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Constant(1, 5.0);
        cfg.stop = StopRule::const_rule();
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::RuleTriggered);
        CHECK(run.stop_index() == 1);
        CHECK(run.x_hat[0] == 0.0);
        CHECK(run.records.size() == 2);
        CHECK(run.records.back().tilde_grad_norm == 0.0);
    }

    SUBCASE("constant noise along the flat coordinate stops immediately under the rule") {
        const Simple3DProblem p{1.0, 0.1};
        InexactOracle oracle(p.objective(), 0.01, 0.0,
                             NoiseModel::constant(vec3(0, 0, 1)), RngStream(51));
        ConstStepConfig cfg;
        cfg.L = p.L;
        cfg.x0 = Vector::Zero(3);
        cfg.stop = StopRule::const_rule();
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::RuleTriggered);
        CHECK(run.stop_index() == 0);
        CHECK(run.x_hat.norm() == 0.0);
        // ||g~(x0)|| = delta <= sqrt(6) delta
        CHECK(run.records.front().tilde_grad_norm == doctest::Approx(0.01).epsilon(1e-12));
    }

    SUBCASE("without the rule the same noise drives the iterates away monotonically") {
        const Simple3DProblem p{1.0, 0.1};
        InexactOracle oracle(p.objective(), 0.01, 0.0,
                             NoiseModel::constant(vec3(0, 0, 1)), RngStream(52));
        ConstStepConfig cfg;
        cfg.L = p.L;
        cfg.x0 = Vector::Zero(3);
        cfg.stop = StopRule::none(200);
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::MaxIters);
        for (std::size_t i = 1; i < run.records.size(); ++i)
            CHECK(run.records[i].dist_from_x0 > run.records[i - 1].dist_from_x0);
    }

    SUBCASE("a biased first partial locks the iterate at delta/mu") {
        // f = (mu x1^2 + L x2^2)/2 with the first partial reported as
        // mu x1 - delta: the fixed point of the noisy iteration is delta/mu
        // and the residual gap cannot drop below ~delta^2/(2 mu).
        Vector d(2);
        d << 0.1, 1.0;
        const QuadraticDiagProblem p(d, 0);
        const double delta = 0.01;
        InexactOracle oracle(p.objective(), delta, 0.0, NoiseModel::first_component_bias(),
                             RngStream(53));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Ones(2);
        cfg.stop = StopRule::none(10000);
        cfg.record_trajectory = true;
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::MaxIters);
        const double locked = delta / 0.1;
        CHECK(run.x_hat[0] >= 0.99 * locked);
        CHECK(run.x_hat[0] <= 1.01 * locked);
        const double floor = delta * delta / (2.0 * 0.1);
        CHECK(run.records.back().f_gap >= 0.99 * floor);
    }

    SUBCASE("overflowing iterates end the run with the last finite point") {
        InexactOracle oracle(rosenbrock_objective(), 0.0, 0.0, NoiseModel::none(), RngStream(54));
        ConstStepConfig cfg;
        cfg.L = 1e-4;  // absurd step: quartic growth explodes in a few iterations
        cfg.x0 = Vector::Constant(2, 10.0);
        cfg.stop = StopRule::none();
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::GradientOverflow);
        CHECK(run.x_hat.allFinite());
    }

    SUBCASE("max_iters cap produces exactly cap steps") {
        InexactOracle oracle(scaled_square_1d(0.5), 0.0, 0.0, NoiseModel::none(), RngStream(55));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Constant(1, 1.0);
        cfg.stop = StopRule::none(10);
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::MaxIters);
        CHECK(run.records.size() == 11);
        CHECK(run.stop_index() == 10);
    }

    SUBCASE("rejects nonpositive L") {
        InexactOracle oracle(scaled_square_1d(1.0), 0.0, 0.0, NoiseModel::none(), RngStream(56));
        ConstStepConfig cfg;
        cfg.L = 0.0;
        cfg.x0 = Vector::Constant(1, 1.0);
        CHECK_THROWS_AS(run_const_step_gd(oracle, cfg), InvalidConfigError);
    }
}

TEST_CASE("adaptive solver hand-checked examples") {
    SUBCASE("first candidate accepted with equality") {
        InexactOracle oracle(scaled_square_1d(1.0), 0.0, 0.0, NoiseModel::none(), RngStream(57));
        AdaptiveConfig cfg;
        cfg.L_min = 0.0;
        cfg.L0 = 0.5;
        cfg.x0 = Vector::Constant(1, 2.0);
        cfg.stop = StopRule::adaptive_rule();
        const RunResult run = run_adaptive_gd(oracle, cfg);
        // candidate x1 = 2 - (1/(2*0.5))*2 = 0; acceptance holds with equality
        CHECK(run.stop_reason == StopReason::RuleTriggered);
        CHECK(run.stop_index() == 1);
        CHECK(run.x_hat[0] == 0.0);
        CHECK(run.records.front().inner_evals == 1);
        CHECK(run.records.front().L_k == 0.5);
    }

    SUBCASE("doubling ladder climbs to the curvature") {
        InexactOracle oracle(scaled_square_1d(4.0), 0.0, 0.0, NoiseModel::none(), RngStream(58));
        AdaptiveConfig cfg;
        cfg.L_min = 0.25;
        cfg.L0 = 0.25;
        cfg.x0 = Vector::Constant(1, 1.0);
        cfg.stop = StopRule::adaptive_rule();
        const RunResult run = run_adaptive_gd(oracle, cfg);
        // trials at L = 0.25, 0.5, 1 fail; L = 2 accepted with x1 = 0
        CHECK(run.records.front().inner_evals == 4);
        CHECK(run.records.front().L_k == 2.0);
        CHECK(run.x_hat[0] == 0.0);
        CHECK(run.stop_index() == 1);
        // query accounting: one gradient per outer iteration, one committed
        // value plus one value per trial on the stepping iteration
        CHECK(run.total_grad_queries == 2);
        CHECK(run.total_value_queries == 5);
        CHECK(run.total_inner_evals() == 4);
    }
}

TEST_CASE("adaptive solver properties on a sampled quadratic") {
    RngStream data_rng(59);
    const auto p = QuadraticDiagProblem::sample(40, 4, 0.2, 1.0, data_rng);

    SUBCASE("accepted L stays within [L_min, 2 L_true] on exact oracles") {
        InexactOracle oracle(p.objective(), 0.0, 0.0, NoiseModel::none(), RngStream(60));
        AdaptiveConfig cfg;
        cfg.L_min = 0.05;
        cfg.L0 = 1.0;
        cfg.x0 = Vector::Constant(40, 3.0);
        cfg.stop = StopRule::adaptive_rule(4000);
        const RunResult run = run_adaptive_gd(oracle, cfg);
        double prev = cfg.L0;
        for (const auto& r : run.records) {
            if (!std::isfinite(r.L_k)) continue;
            CHECK(r.L_k >= cfg.L_min);
            CHECK(r.L_k <= 2.0 * p.lipschitz() + 1e-9);
            // the next acceptance starts from the halved previous value
            CHECK(r.L_k >= std::max(prev / 2.0, cfg.L_min) - 1e-12);
            prev = r.L_k;
        }
    }

    SUBCASE("with noise the rule terminates and the gap obeys the guarantee") {
        const double delta = 1e-3;
        InexactOracle oracle(p.objective(), delta, delta * delta / 16.0,
                             NoiseModel::random_sphere(), RngStream(61));
        AdaptiveConfig cfg;
        cfg.L_min = p.mu() / 4.0;
        cfg.L0 = 1.0;
        cfg.x0 = Vector::Constant(40, 3.0);
        cfg.stop = StopRule::adaptive_rule();
        const RunResult run = run_adaptive_gd(oracle, cfg);
        CHECK(run.stop_reason == StopReason::RuleTriggered);
        CHECK(run.records.back().tilde_grad_norm <= 2.0 * delta);
        CHECK(run.records.back().f_gap <= 5.0 * delta * delta / p.mu());
        // call-count bound: I(N) <= 2N + log2(2 L_max / L0)
        double l_max = 0.0;
        for (const auto& r : run.records)
            if (std::isfinite(r.L_k)) l_max = std::max(l_max, r.L_k);
        const double bound =
            2.0 * static_cast<double>(run.stop_index()) + std::log2(2.0 * l_max / cfg.L0);
        CHECK(static_cast<double>(run.total_inner_evals()) <= bound + 1e-9);
    }

    SUBCASE("deterministic replay") {
        RunResult first;
        for (int rep = 0; rep < 2; ++rep) {
            InexactOracle oracle(p.objective(), 1e-2, 1e-5, NoiseModel::random_sphere(),
                                 RngStream(62, 5));
            AdaptiveConfig cfg;
            cfg.L_min = 0.05;
            cfg.L0 = 1.0;
            cfg.x0 = Vector::Constant(40, 2.0);
            cfg.stop = StopRule::adaptive_rule(500);
            const RunResult run = run_adaptive_gd(oracle, cfg);
            if (rep == 0) {
                first = run;
                continue;
            }
            REQUIRE(first.records.size() == run.records.size());
            for (std::size_t i = 0; i < run.records.size(); ++i) {
                CHECK(first.records[i].f_gap == run.records[i].f_gap);
                CHECK(first.records[i].tilde_grad_norm == run.records[i].tilde_grad_norm);
            }
            CHECK(first.x_hat == run.x_hat);
        }
    }
}

TEST_CASE("adaptive solver flags an oracle whose values never admit a step") {
    Objective broken;
    broken.dim = 1;
    broken.value = [](const Vector& x) { return x[0] == 1.0 ? 0.0 : 1e300; };
    broken.gradient = [](const Vector&) { return Vector::Constant(1, 1.0); };
    InexactOracle oracle(broken, 0.0, 0.0, NoiseModel::none(), RngStream(63));
    AdaptiveConfig cfg;
    cfg.L_min = 0.0;
    cfg.L0 = 1.0;
    cfg.x0 = Vector::Constant(1, 1.0);
    cfg.stop = StopRule::none();
    CHECK_THROWS_AS(run_adaptive_gd(oracle, cfg), InnerLoopDivergenceError);
}

TEST_CASE("trajectory recording can be disabled") {
    InexactOracle oracle(scaled_square_1d(1.0), 0.0, 0.0, NoiseModel::none(), RngStream(64));
    ConstStepConfig cfg;
    cfg.L = 1.0;
    cfg.x0 = Vector::Constant(1, 1.0);
    cfg.stop = StopRule::none(5);
    cfg.record_trajectory = false;
    const RunResult run = run_const_step_gd(oracle, cfg);
    CHECK(run.trajectory.empty());
    CHECK(run.records.size() == 6);
}
