#include <cmath>
#include <limits>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "plgd/errors.hpp"
#include "plgd/problems/quadratic.hpp"
#include "plgd/theory.hpp"

using namespace plgd;

namespace {

TheoryInputs base_inputs() {
    TheoryInputs inp;
    inp.L = 1.0;
    inp.mu = 0.5;
    inp.delta = 0.1;
    inp.gap0 = 1.0;
    return inp;
}

}  // namespace

TEST_CASE("constant-step budget") {
    TheoryInputs inp = base_inputs();
    // ceil(2 ln(0.5/0.06)) = ceil(4.24052...) = 5
    CHECK(budget_const(inp) == 5);

    SUBCASE("already at the target level") {
        inp.gap0 = 6.0 * inp.delta * inp.delta / *inp.mu;  // arg exactly 1
        CHECK(budget_const(inp) == 0);
        inp.gap0 = 0.0;
        CHECK(budget_const(inp) == 0);
    }
    SUBCASE("non-increasing in delta, non-decreasing in gap0") {
        std::int64_t prev = budget_const(inp);
        for (double delta : {0.2, 0.4, 0.8}) {
            inp.delta = delta;
            const std::int64_t cur = budget_const(inp);
            CHECK(cur <= prev);
            prev = cur;
        }
        inp = base_inputs();
        prev = budget_const(inp);
        for (double gap : {2.0, 10.0, 1e4}) {
            inp.gap0 = gap;
            const std::int64_t cur = budget_const(inp);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
    SUBCASE("delta = 0 has no finite budget") {
        inp.delta = 0.0;
        CHECK_THROWS_AS(budget_const(inp), InfiniteBudgetError);
    }
    SUBCASE("missing mu is not applicable") {
        inp.mu.reset();
        CHECK_THROWS_AS(budget_const(inp), NotApplicableError);
    }
}

TEST_CASE("rule-only budget (no gradient dominance)") {
    TheoryInputs inp = base_inputs();
    inp.gap0 = 2.0;
    CHECK(budget_no_pl(inp) == doctest::Approx(400.0).epsilon(1e-15));
    inp.gap0 = 0.0;
    CHECK(budget_no_pl(inp) == 0.0);
    SUBCASE("halving delta quadruples the cap") {
        inp.gap0 = 2.0;
        const double full = budget_no_pl(inp);
        inp.delta = 0.05;
        CHECK(budget_no_pl(inp) == doctest::Approx(4.0 * full).epsilon(1e-14));
    }
    SUBCASE("delta = 0 throws") {
        inp.delta = 0.0;
        CHECK_THROWS_AS(budget_no_pl(inp), InfiniteBudgetError);
    }
}

TEST_CASE("gap guarantees") {
    TheoryInputs inp = base_inputs();
    inp.mu = 0.1;
    const auto [g_const, g_adaptive] = gap_guarantees(inp);
    CHECK(g_const == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(g_adaptive == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g_const >= g_adaptive);
    inp.delta = 0.0;
    const auto zero = gap_guarantees(inp);
    CHECK(zero.first == 0.0);
    CHECK(zero.second == 0.0);
    inp.mu.reset();
    CHECK_THROWS_AS(gap_guarantees(inp), NotApplicableError);
}

TEST_CASE("constant-step drift bound") {
    TheoryInputs inp = base_inputs();
    // (0.2/0.5) sqrt(3) * 3 + 4 * 1 / 0.5 = 10.0784609...
    const double expected =
        0.4 * std::sqrt(3.0) * 3.0 + 8.0;
    CHECK(dist_bound_const(inp) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(dist_bound_const(inp) == doctest::Approx(10.0785).epsilon(1e-3));

    SUBCASE("zero gap clamps to zero") {
        inp.gap0 = 0.0;
        CHECK(dist_bound_const(inp) == 0.0);
    }
    SUBCASE("decreasing across decade steps in mu") {
        // Monotone on coarse grids; the ceiling term can tick up between
        // nearby mu values, so only decade-scale monotonicity is asserted.
        inp = base_inputs();
        double prev = std::numeric_limits<double>::infinity();
        for (double mu : {0.01, 0.1, 0.5, 1.0}) {
            inp.mu = mu;
            const double cur = dist_bound_const(inp);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("mu-free drift bounds") {
    TheoryInputs inp = base_inputs();
    inp.gap0 = 2.0;
    SUBCASE("zero steps, zero drift") {
        CHECK(dist_bounds_no_mu(inp, 0.0).first == 0.0);
    }
    SUBCASE("hand-evaluated point where the two bounds coincide") {
        const auto [a, b] = dist_bounds_no_mu(inp, 400.0);
        CHECK(a == doctest::Approx(136.5685424949238).epsilon(1e-14));
        CHECK(b == doctest::Approx(136.5685424949238).epsilon(1e-14));
    }
    SUBCASE("bound (a) grows with N") {
        double prev = 0.0;
        for (double n : {1.0, 10.0, 100.0, 1e4}) {
            const double cur = dist_bounds_no_mu(inp, n).first;
            CHECK(cur > prev);
            prev = cur;
        }
    }
    SUBCASE("identity: (b) equals (a) at the rule-only budget") {
        RngStream rng(70);
        for (int i = 0; i < 100; ++i) {
            TheoryInputs r;
            r.L = rng.uniform(0.1, 10.0);
            r.delta = rng.uniform(1e-4, 1.0);
            r.gap0 = rng.uniform(0.0, 1e5);
            const double n = budget_no_pl(r);
            const auto [a, b] = dist_bounds_no_mu(r, n);
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("adaptive budget") {
    TheoryInputs inp = base_inputs();
    // ceil(16 ln 50) = ceil(62.5923...) = 63
    CHECK(budget_adaptive(inp) == 63);
    SUBCASE("clamps at the target level") {
        inp.gap0 = inp.delta * inp.delta / *inp.mu;  // arg exactly 1
        CHECK(budget_adaptive(inp) == 0);
    }
    SUBCASE("dominates the constant-step budget") {
        for (double gap : {1.0, 100.0, 1e6}) {
            inp.gap0 = gap;
            CHECK(budget_adaptive(inp) >= budget_const(inp));
        }
    }
    SUBCASE("delta = 0 throws") {
        inp.delta = 0.0;
        CHECK_THROWS_AS(budget_adaptive(inp), InfiniteBudgetError);
    }
}

TEST_CASE("value-noise-aware budget") {
    TheoryInputs inp = base_inputs();
    inp.gap0 = 2.0;
    SUBCASE("reduces to the rule-only budget at zero value noise") {
        CHECK(budget_adaptive_delta(inp) == budget_no_pl(inp));
    }
    SUBCASE("hand-evaluated point") {
        inp.small_delta = inp.delta * inp.delta / 32.0;
        CHECK(budget_adaptive_delta(inp) == doctest::Approx(800.0).epsilon(1e-14));
    }
    SUBCASE("violated premise throws") {
        inp.small_delta = inp.delta * inp.delta / 16.0;  // denominator exactly zero
        CHECK_THROWS_AS(budget_adaptive_delta(inp), PremiseViolatedError);
        inp.small_delta = inp.delta * inp.delta;
        CHECK_THROWS_AS(budget_adaptive_delta(inp), PremiseViolatedError);
    }
    SUBCASE("blows up toward the premise boundary") {
        inp.small_delta = inp.delta * inp.delta / 16.0 * (1.0 - 1e-9);
        CHECK(budget_adaptive_delta(inp) > 1e9);
    }
}

TEST_CASE("adaptive drift bounds") {
    TheoryInputs inp = base_inputs();
    inp.L_min = 0.25;
    SUBCASE("gamma is L over L_min") {
        CHECK(*inp.gamma() == doctest::Approx(4.0).epsilon(1e-15));
    }
    SUBCASE("log term clamps, leaving the square-root tail") {
        inp.gap0 = inp.delta * inp.delta / *inp.mu;  // arg = 1
        const auto [first, second] = dist_bound_adaptive(inp);
        const double gamma = 4.0;
        CHECK(first ==
              doctest::Approx(16.0 * std::sqrt(gamma * inp.L * inp.gap0) / *inp.mu).epsilon(1e-14));
        CHECK(second ==
              doctest::Approx(16.0 * std::sqrt(inp.L / *inp.L_min) *
                              std::sqrt(inp.L * inp.gap0) / *inp.mu)
                  .epsilon(1e-14));
    }
    SUBCASE("full evaluation matches an independent long-double recomputation") {
        const auto [first, second] = dist_bound_adaptive(inp);
        const long double mu = 0.5L, L = 1.0L, lmin = 0.25L, delta = 0.1L, gap0 = 1.0L;
        const long double gamma = L / lmin;
        const long double lg = std::log(mu * gap0 / (delta * delta));
        const long double ref1 = 8.0L * (delta / mu) * std::sqrt(0.5L * gamma * gamma +
                                                                 4.0L * gamma * L / mu) *
                                     lg +
                                 16.0L * std::sqrt(gamma * L * gap0) / mu;
        const long double n = std::ceil(8.0L * L / mu * lg);
        const long double ref2 =
            n * delta * std::sqrt(1.0L / (2.0L * lmin * lmin) + 4.0L / (mu * lmin)) +
            16.0L * std::sqrt(L / lmin) * std::sqrt(L * gap0) / mu;
        CHECK(first == doctest::Approx(static_cast<double>(ref1)).epsilon(1e-12));
        CHECK(second == doctest::Approx(static_cast<double>(ref2)).epsilon(1e-12));
    }
    SUBCASE("missing L_min is not applicable") {
        inp.L_min.reset();
        CHECK_THROWS_AS(dist_bound_adaptive(inp), NotApplicableError);
    }
}

TEST_CASE("bounds report serialization") {
    TheoryInputs inp = base_inputs();
    inp.L_min = 0.25;
    inp.small_delta = 1e-5;
    const BoundsReport report = make_bounds_report(inp);
    const nlohmann::json j = report.to_json();
    CHECK(j.at("n_star_const").get<std::int64_t>() == 5);
    CHECK(j.at("n_star_adaptive").get<std::int64_t>() == 63);
    CHECK(j.at("gap_guarantee_const").get<double>() == doctest::Approx(0.14).epsilon(1e-12));
    CHECK(j.contains("dist_bound_no_mu_a"));
    CHECK(j.contains("dist_bound_adaptive_n"));

    TheoryInputs no_mu = inp;
    no_mu.mu.reset();
    const nlohmann::json j2 = make_bounds_report(no_mu).to_json();
    CHECK(j2.at("n_star_const").is_null());
    CHECK_FALSE(j2.at("n_cap_no_pl").is_null());
}

namespace {

struct CertFixture {
    QuadraticDiagProblem problem;
    Objective objective;
    TheoryInputs inputs;

    CertFixture()
        : problem([] {
              RngStream rng(71);
              return QuadraticDiagProblem::sample(20, 2, 0.1, 1.0, rng);
          }()),
          objective(problem.objective()) {
        inputs.L = 1.0;
        inputs.mu = 0.1;
        inputs.gap0 = 0.0;  // filled per run
    }
};

}  // namespace

TEST_CASE("certificate verification") {
    CertFixture fix;

    SUBCASE("exact constant-step run passes with zero violation") {
        InexactOracle oracle(fix.objective, 0.0, 0.0, NoiseModel::none(), RngStream(72));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Constant(20, 4.0);
        cfg.stop = StopRule::none(300);
        const RunResult run = run_const_step_gd(oracle, cfg);
        TheoryInputs inp = fix.inputs;
        inp.delta = 0.0;
        inp.gap0 = run.records.front().f_gap;
        const CertificateReport report =
            verify_certificates(run, fix.objective, inp, SolverMode::ConstStep);
        CHECK(report.pass());
        CHECK(report.worst_violation() == 0.0);
        CHECK(report.checks.size() == 3);
        for (const auto& c : report.checks) CHECK(c.applicable);
    }

    SUBCASE("noisy runs on both solvers pass") {
        const double delta = 1e-3;
        {
            InexactOracle oracle(fix.objective, delta, 0.0, NoiseModel::random_sphere(),
                                 RngStream(73));
            ConstStepConfig cfg;
            cfg.L = 1.0;
            cfg.x0 = Vector::Constant(20, 4.0);
            cfg.stop = StopRule::const_rule();
            const RunResult run = run_const_step_gd(oracle, cfg);
            TheoryInputs inp = fix.inputs;
            inp.delta = delta;
            inp.gap0 = run.records.front().f_gap;
            CHECK(verify_certificates(run, fix.objective, inp, SolverMode::ConstStep).pass());
        }
        {
            const double small_delta = delta * delta / 16.0;
            InexactOracle oracle(fix.objective, delta, small_delta, NoiseModel::random_sphere(),
                                 RngStream(74));
            AdaptiveConfig cfg;
            cfg.L_min = 0.1 / 4.0;
            cfg.L0 = 1.0;
            cfg.x0 = Vector::Constant(20, 4.0);
            cfg.stop = StopRule::adaptive_rule();
            const RunResult run = run_adaptive_gd(oracle, cfg);
            TheoryInputs inp = fix.inputs;
            inp.delta = delta;
            inp.small_delta = small_delta;
            inp.gap0 = run.records.front().f_gap;
            const CertificateReport report =
                verify_certificates(run, fix.objective, inp, SolverMode::Adaptive);
            CHECK(report.pass());
        }
    }

    SUBCASE("a corrupted iterate is flagged with its index") {
        InexactOracle oracle(fix.objective, 1e-3, 0.0, NoiseModel::random_sphere(),
                             RngStream(75));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Constant(20, 4.0);
        cfg.stop = StopRule::const_rule();
        RunResult run = run_const_step_gd(oracle, cfg);
        REQUIRE(run.trajectory.size() > 10);
        run.trajectory[5][19] += 1.0;  // corrupt one iterate along a curved coordinate
        TheoryInputs inp = fix.inputs;
        inp.delta = 1e-3;
        inp.gap0 = run.records.front().f_gap;
        const CertificateReport report =
            verify_certificates(run, fix.objective, inp, SolverMode::ConstStep);
        CHECK_FALSE(report.pass());
        bool flagged = false;
        for (const auto& c : report.checks)
            for (auto idx : c.failing_indices) flagged = flagged || idx == 4 || idx == 5;
        CHECK(flagged);
    }

    SUBCASE("runs without trajectories are rejected") {
        InexactOracle oracle(fix.objective, 0.0, 0.0, NoiseModel::none(), RngStream(76));
        ConstStepConfig cfg;
        cfg.L = 1.0;
        cfg.x0 = Vector::Constant(20, 4.0);
        cfg.stop = StopRule::none(10);
        cfg.record_trajectory = false;
        const RunResult run = run_const_step_gd(oracle, cfg);
        CHECK_THROWS_AS(verify_certificates(run, fix.objective, fix.inputs, SolverMode::ConstStep),
                        InvalidConfigError);
    }
}
