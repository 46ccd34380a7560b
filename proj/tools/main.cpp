#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "plgd/errors.hpp"
#include "plgd/harness.hpp"

namespace {

using plgd::ExperimentSpec;

struct CliOptions {
    ExperimentSpec spec;
    std::string problem = "quadratic";
    std::string solver;
    std::string noise;
    std::string stop;
    std::uint64_t seed = 1;
};

plgd::ProblemKind parse_problem(const std::string& s) {
    if (s == "quadratic") return plgd::ProblemKind::Quadratic;
    if (s == "simple3d") return plgd::ProblemKind::Simple3D;
    if (s == "logreg") return plgd::ProblemKind::LogReg;
    if (s == "rosenbrock") return plgd::ProblemKind::Rosenbrock;
    return plgd::ProblemKind::NesterovSkokov;
}

void finalize(CliOptions& opt) {
    opt.spec.problem = parse_problem(opt.problem);
    if (opt.solver == "const") opt.spec.solver = plgd::SolverKind::ConstStep;
    if (opt.solver == "adaptive") opt.spec.solver = plgd::SolverKind::Adaptive;
    if (opt.noise == "none") opt.spec.noise = plgd::NoiseSelector::None;
    if (opt.noise == "random") opt.spec.noise = plgd::NoiseSelector::Random;
    if (opt.noise == "antigradient") opt.spec.noise = plgd::NoiseSelector::Antigradient;
    if (opt.noise == "constant") opt.spec.noise = plgd::NoiseSelector::Constant;
    if (opt.noise == "first-component") opt.spec.noise = plgd::NoiseSelector::FirstComponent;
    if (opt.stop == "const-rule") opt.spec.stop = plgd::StopRuleKind::ConstRule;
    if (opt.stop == "adaptive-rule") opt.spec.stop = plgd::StopRuleKind::AdaptiveRule;
    if (opt.stop == "none") opt.spec.stop = plgd::StopRuleKind::None;
    opt.spec.seed = opt.seed;
}

void add_experiment_flags(CLI::App* cmd, CliOptions& opt, bool with_problem) {
    if (with_problem)
        cmd->add_option("--problem", opt.problem, "objective to run")
            ->check(CLI::IsMember(
                {"quadratic", "simple3d", "logreg", "rosenbrock", "nesterov-skokov"}));
    cmd->add_option("--solver", opt.solver, "const | adaptive")
        ->check(CLI::IsMember({"const", "adaptive"}));
    cmd->add_option("--noise", opt.noise, "gradient error direction model")
        ->check(CLI::IsMember({"none", "random", "antigradient", "constant", "first-component"}));
    cmd->add_option("--delta", opt.spec.delta, "gradient error bound");
    cmd->add_option("--small-delta", opt.spec.small_delta,
                    "value error bound (default delta^2/(16 L) when L is known, else delta^2)");
    cmd->add_option("--mu", opt.spec.mu, "gradient-dominance modulus / spectrum lower end");
    cmd->add_option("--L", opt.spec.L, "smoothness constant / spectrum upper end");
    cmd->add_option("--n", opt.spec.n, "dimension");
    cmd->add_option("--k", opt.spec.k, "zero-eigenvalue count / basis rank");
    cmd->add_option("--m", opt.spec.m, "sample count (logreg)");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--trials", opt.spec.trials, "trials per grid cell");
    cmd->add_option("--stop", opt.stop, "stopping rule")
        ->check(CLI::IsMember({"const-rule", "adaptive-rule", "none"}));
    cmd->add_option("--max-iters", opt.spec.max_iters, "iteration safety cap");
    cmd->add_option("--out", opt.spec.out, "output file / prefix");
    cmd->set_config("--config", "", "flat key=value config file (flags take precedence)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradient methods with additively inexact gradients: early stopping,\n"
                 "adaptive step sizes, closed-form budgets and runtime certificates"};
    app.require_subcommand(1);

    CliOptions opt;
    std::uint64_t validate_seed = 1;

    CLI::App* run = app.add_subcommand("run", "single solver run, per-iteration CSV");
    add_experiment_flags(run, opt, true);
    CLI::App* table = app.add_subcommand(
        "table-quadratic", "mu x delta grid on the diagonal quadratic, both solvers");
    add_experiment_flags(table, opt, false);
    CLI::App* logreg =
        app.add_subcommand("logreg", "synthetic logistic regression convergence curves");
    add_experiment_flags(logreg, opt, false);
    CLI::App* rosen =
        app.add_subcommand("rosenbrock", "adaptive-method table on the 2-D Rosenbrock function");
    add_experiment_flags(rosen, opt, false);
    CLI::App* ns = app.add_subcommand("nesterov-skokov",
                                      "adaptive-method table on the chained test function");
    add_experiment_flags(ns, opt, false);
    CLI::App* validate = app.add_subcommand("validate", "run the library self-check suite");
    validate->add_option("--seed", validate_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        finalize(opt);
        if (run->parsed()) return plgd::cmd_run(opt.spec, std::cout);
        if (table->parsed()) return plgd::cmd_table_quadratic(opt.spec, std::cout);
        if (logreg->parsed()) return plgd::cmd_logreg(opt.spec, std::cout);
        if (rosen->parsed()) return plgd::cmd_rosenbrock(opt.spec, std::cout);
        if (ns->parsed()) return plgd::cmd_nesterov_skokov(opt.spec, std::cout);
        if (validate->parsed()) return plgd::cmd_validate(validate_seed, std::cout);
    } catch (const plgd::InvalidConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const plgd::NumericOverflowError& e) {
        std::cerr << "numeric overflow: " << e.what() << "\n";
        return 3;
    } catch (const plgd::InnerLoopDivergenceError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
