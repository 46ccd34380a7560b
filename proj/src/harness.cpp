#include "plgd/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plgd/errors.hpp"
#include "plgd/problems/logreg.hpp"
#include "plgd/problems/nesterov_skokov.hpp"
#include "plgd/problems/quadratic.hpp"
#include "plgd/problems/rosenbrock.hpp"
#include "plgd/problems/simple3d.hpp"
#include "plgd/validate.hpp"

namespace plgd {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidConfigError("cannot open output file: " + path);
    return out;
}

/// run.csv -> run<suffix>.csv; run -> run<suffix>
std::string with_suffix(const std::string& path, const std::string& suffix) {
    const std::string ext = ".csv";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
        return path.substr(0, path.size() - ext.size()) + suffix;
    return path + suffix;
}

constexpr double kQuadraticStartDistance = 948.7;

}  // namespace

const char* to_string(ProblemKind p) {
    switch (p) {
        case ProblemKind::Quadratic: return "quadratic";
        case ProblemKind::Simple3D: return "simple3d";
        case ProblemKind::LogReg: return "logreg";
        case ProblemKind::Rosenbrock: return "rosenbrock";
        case ProblemKind::NesterovSkokov: return "nesterov-skokov";
    }
    return "?";
}

const char* to_string(SolverKind s) {
    return s == SolverKind::ConstStep ? "const" : "adaptive";
}

const char* to_string(NoiseSelector n) {
    switch (n) {
        case NoiseSelector::None: return "none";
        case NoiseSelector::Random: return "random";
        case NoiseSelector::Antigradient: return "antigradient";
        case NoiseSelector::Constant: return "constant";
        case NoiseSelector::FirstComponent: return "first-component";
    }
    return "?";
}

const char* to_string(StopRuleKind r) {
    switch (r) {
        case StopRuleKind::None: return "none";
        case StopRuleKind::ConstRule: return "const-rule";
        case StopRuleKind::AdaptiveRule: return "adaptive-rule";
    }
    return "?";
}

ResolvedExperiment resolve_experiment(const ExperimentSpec& in, std::uint64_t data_stream_id) {
    ResolvedExperiment exp;
    exp.spec = in;
    exp.delta = in.delta.value_or(1e-4);
    exp.spec.delta = exp.delta;
    if (exp.delta < 0.0) throw InvalidConfigError("delta must be >= 0");
    if (in.trials < 1) throw InvalidConfigError("trials must be >= 1");
    if (in.max_iters < 0) throw InvalidConfigError("max-iters must be >= 0");

    RngStream data_rng(in.seed, data_stream_id);

    switch (in.problem) {
        case ProblemKind::Quadratic: {
            const int n = in.n.value_or(100);
            const int k = in.k.value_or(10);
            const double mu = in.mu.value_or(0.1);
            const double L = in.L.value_or(1.0);
            const auto problem = QuadraticDiagProblem::sample(n, k, mu, L, data_rng);
            exp.objective = problem.objective();
            // Start at distance 948.7 from the nearest minimizer (the
            // projection of x0 onto the flat subspace).
            const double c = kQuadraticStartDistance / std::sqrt(static_cast<double>(n - k));
            exp.x0 = Vector::Constant(n, c);
            exp.spec.n = n;
            exp.spec.k = k;
            exp.spec.mu = mu;
            exp.spec.L = L;
            exp.const_step_L = L;
            break;
        }
        case ProblemKind::Simple3D: {
            Simple3DProblem problem;
            problem.L = in.L.value_or(1.0);
            problem.mu = in.mu.value_or(0.1);
            if (!(problem.L > problem.mu && problem.mu > 0.0))
                throw InvalidConfigError("simple3d requires L > mu > 0");
            exp.objective = problem.objective();
            exp.x0 = Vector::Zero(3);
            exp.spec.mu = problem.mu;
            exp.spec.L = problem.L;
            exp.const_step_L = problem.L;
            break;
        }
        case ProblemKind::LogReg: {
            const int n = in.n.value_or(200);
            const int m = in.m.value_or(700);
            const int k = in.k.value_or(10);
            const LogRegData data = generate_logreg_data(n, m, k, data_rng);
            exp.objective = logreg_objective(data);
            exp.x0 = Vector::Zero(n);
            exp.spec.n = n;
            exp.spec.m = m;
            exp.spec.k = k;
            exp.spec.L = *exp.objective.lipschitz_L;
            exp.const_step_L = *exp.objective.lipschitz_L;
            break;
        }
        case ProblemKind::Rosenbrock: {
            exp.objective = rosenbrock_objective();
            exp.x0 = Vector(2);
            exp.x0 << 1.0, 2.0;
            break;
        }
        case ProblemKind::NesterovSkokov: {
            NesterovSkokovProblem problem;
            problem.n = in.n.value_or(7);
            if (problem.n < 2) throw InvalidConfigError("nesterov-skokov requires n >= 2");
            exp.objective = problem.objective();
            exp.x0 = Vector::Ones(problem.n);
            exp.x0[0] = -1.0;
            exp.spec.n = problem.n;
            break;
        }
    }

    const bool smooth_constant_known =
        in.problem != ProblemKind::Rosenbrock && in.problem != ProblemKind::NesterovSkokov;
    exp.solver = in.solver.value_or(smooth_constant_known ? SolverKind::ConstStep
                                                          : SolverKind::Adaptive);
    exp.spec.solver = exp.solver;

    if (exp.solver == SolverKind::ConstStep && !smooth_constant_known) {
        if (!in.L)
            throw InvalidConfigError(
                "constant-step runs on this problem need --L (no global smoothness constant)");
        exp.const_step_L = *in.L;
    }

    const StopRuleKind rule_kind = in.stop.value_or(
        exp.solver == SolverKind::ConstStep ? StopRuleKind::ConstRule : StopRuleKind::AdaptiveRule);
    exp.spec.stop = rule_kind;
    exp.rule = StopRule{rule_kind, in.max_iters};

    const std::optional<double> L_known =
        smooth_constant_known ? exp.objective.lipschitz_L : std::optional<double>{};
    exp.small_delta = in.small_delta.value_or(
        L_known ? exp.delta * exp.delta / (16.0 * *L_known) : exp.delta * exp.delta);
    if (exp.small_delta < 0.0) throw InvalidConfigError("small-delta must be >= 0");
    exp.spec.small_delta = exp.small_delta;
    // The adaptive analysis asks for delta^2 >= 16 L small_delta; equality is
    // allowed (the default small_delta sits exactly on it), so compare with a
    // relative rounding allowance.
    if (L_known)
        exp.value_noise_premise_ok =
            exp.delta == 0.0 ||
            16.0 * *L_known * exp.small_delta <= exp.delta * exp.delta * (1.0 + 1e-12);

    exp.adaptive_L0 = in.L ? *in.L : L_known.value_or(1.0);
    exp.adaptive_L_min = exp.objective.pl_mu ? *exp.objective.pl_mu / 4.0 : 1e-6;
    if (exp.adaptive_L0 < exp.adaptive_L_min) exp.adaptive_L0 = exp.adaptive_L_min;

    const NoiseSelector sel = in.noise.value_or(NoiseSelector::Random);
    exp.spec.noise = sel;
    switch (sel) {
        case NoiseSelector::None: exp.noise_model = NoiseModel::none(); break;
        case NoiseSelector::Random: exp.noise_model = NoiseModel::random_sphere(); break;
        case NoiseSelector::Antigradient: exp.noise_model = NoiseModel::antigradient(); break;
        case NoiseSelector::Constant:
            exp.noise_model = NoiseModel::constant(Vector::Unit(exp.objective.dim, 0));
            break;
        case NoiseSelector::FirstComponent:
            exp.noise_model = NoiseModel::first_component_bias();
            break;
    }
    return exp;
}

std::string ResolvedExperiment::header() const {
    std::ostringstream out;
    out << "# problem=" << to_string(spec.problem);
    if (spec.n) out << " n=" << *spec.n;
    if (spec.k) out << " k=" << *spec.k;
    if (spec.m) out << " m=" << *spec.m;
    if (spec.mu) out << " mu=" << fmt(*spec.mu);
    if (spec.L) out << " L=" << fmt(*spec.L);
    out << "\n# solver=" << to_string(solver) << " stop=" << to_string(rule.kind)
        << " max_iters=" << rule.max_iters << "\n";
    out << "# noise=" << to_string(*spec.noise) << " delta=" << fmt(delta)
        << " small_delta=" << fmt(small_delta) << "\n";
    out << "# seed=" << spec.seed << " trials=" << spec.trials << "\n";
    if (solver == SolverKind::ConstStep)
        out << "# step_L=" << fmt(const_step_L) << "\n";
    else
        out << "# adaptive_L0=" << fmt(adaptive_L0) << " adaptive_L_min=" << fmt(adaptive_L_min)
            << " value_noise_premise_ok=" << (value_noise_premise_ok ? 1 : 0) << "\n";
    return out.str();
}

RunResult execute(const ResolvedExperiment& exp, std::uint64_t stream_id, bool record_trajectory) {
    InexactOracle oracle(exp.objective, exp.delta, exp.small_delta, exp.noise_model,
                         RngStream(exp.spec.seed, stream_id));
    if (exp.solver == SolverKind::ConstStep) {
        ConstStepConfig cfg;
        cfg.L = exp.const_step_L;
        cfg.x0 = exp.x0;
        cfg.stop = exp.rule;
        cfg.record_trajectory = record_trajectory;
        return run_const_step_gd(oracle, cfg);
    }
    AdaptiveConfig cfg;
    cfg.L_min = exp.adaptive_L_min;
    cfg.L0 = exp.adaptive_L0;
    cfg.x0 = exp.x0;
    cfg.stop = exp.rule;
    cfg.record_trajectory = record_trajectory;
    return run_adaptive_gd(oracle, cfg);
}

void write_run_csv(const std::string& path, const ResolvedExperiment& exp, const RunResult& run) {
    std::ofstream out = open_out(path);
    out << exp.header();
    out << "# stop_reason=" << to_string(run.stop_reason)
        << " grad_queries=" << run.total_grad_queries
        << " value_queries=" << run.total_value_queries << "\n";
    out << "k,f_gap,exact_grad_norm,tilde_grad_norm,dist_from_x0,L_k,inner_evals\n";
    const bool adaptive = exp.solver == SolverKind::Adaptive;
    for (const auto& r : run.records) {
        out << r.k << ',' << fmt(r.f_gap) << ',' << fmt(r.exact_grad_norm) << ','
            << fmt(r.tilde_grad_norm) << ',' << fmt(r.dist_from_x0) << ',';
        if (adaptive && std::isfinite(r.L_k)) out << fmt(r.L_k);
        out << ',';
        if (adaptive && r.inner_evals > 0) out << r.inner_evals;
        out << '\n';
    }
}

void write_curve(const std::string& path, const std::vector<double>& xs,
                 const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw InvalidConfigError("write_curve: length mismatch");
    std::ofstream out = open_out(path);
    for (std::size_t i = 0; i < xs.size(); ++i) out << fmt(xs[i]) << ' ' << fmt(ys[i]) << '\n';
}

namespace {

TheoryInputs theory_inputs_for(const ResolvedExperiment& exp, const RunResult& run) {
    TheoryInputs inp;
    inp.L = exp.solver == SolverKind::ConstStep ? exp.const_step_L
                                                : exp.objective.lipschitz_L.value_or(exp.adaptive_L0);
    inp.mu = exp.objective.pl_mu;
    inp.delta = exp.delta;
    inp.small_delta = exp.small_delta;
    inp.gap0 = run.records.empty() ? 0.0 : run.records.front().f_gap;
    if (exp.solver == SolverKind::Adaptive && exp.adaptive_L_min > 0.0)
        inp.L_min = exp.adaptive_L_min;
    return inp;
}

void print_summary(const ResolvedExperiment& exp, const RunResult& run, std::ostream& log) {
    log << "stop=" << to_string(run.stop_reason) << " N=" << run.stop_index();
    if (!run.records.empty()) {
        const auto& last = run.records.back();
        log << " f_gap=" << fmt(last.f_gap) << " dist_from_x0=" << fmt(last.dist_from_x0);
        if (exp.delta > 0.0) log << " grad_ratio=" << fmt(last.exact_grad_norm / exp.delta);
    }
    log << "\n";
}

}  // namespace

int cmd_run(const ExperimentSpec& spec, std::ostream& log) {
    ResolvedExperiment exp;
    try {
        exp = resolve_experiment(spec);
    } catch (const InvalidConfigError& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
    if (!exp.value_noise_premise_ok)
        log << "warning: small_delta violates delta^2 > 16 L small_delta; the adaptive "
               "budget and gap guarantee do not apply\n";

    const auto t0 = std::chrono::steady_clock::now();
    const RunResult run = execute(exp, /*stream_id=*/1);
    const double ms = elapsed_ms(t0);

    const std::string out_path = spec.out.empty() ? "run.csv" : spec.out;
    write_run_csv(out_path, exp, run);

    const TheoryInputs inp = theory_inputs_for(exp, run);
    const BoundsReport bounds =
        make_bounds_report(inp, static_cast<double>(run.stop_index()));
    std::ofstream bounds_out = open_out(with_suffix(out_path, ".bounds.json"));
    bounds_out << bounds.to_json().dump(2) << "\n";

    print_summary(exp, run, log);
    log << "bounds: " << bounds.to_json().dump() << "\n";
    log << "wrote " << out_path << " (" << run.records.size() << " records, " << fmt(ms)
        << " ms)\n";

    if (run.stop_reason == StopReason::GradientOverflow) {
        log << "numeric overflow; last finite iterate recorded in x_hat (norm "
            << fmt(run.x_hat.norm()) << ")\n";
        return 3;
    }
    return 0;
}

int cmd_table_quadratic(const ExperimentSpec& spec, std::ostream& log) {
    std::vector<double> mu_grid = spec.mu ? std::vector<double>{*spec.mu}
                                          : std::vector<double>{0.01, 0.1, 0.9, 0.99};
    std::vector<double> delta_grid = spec.delta ? std::vector<double>{*spec.delta}
                                                : std::vector<double>{1e-7, 1e-4, 1e-1};
    for (double mu : mu_grid)
        if (!(mu > 0.0 && mu <= 1.0)) {
            log << "error: table-quadratic needs mu in (0, 1]\n";
            return 2;
        }

    const std::string out_path = spec.out.empty() ? "table_quadratic.csv" : spec.out;
    std::ofstream out;
    try {
        out = open_out(out_path);
    } catch (const InvalidConfigError& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }

    bool header_written = false;
    for (double mu : mu_grid) {
        for (double delta : delta_grid) {
            struct Mean {
                double n = 0, dist = 0, ratio = 0, gap = 0;
            } mean[2];
            for (int trial = 0; trial < spec.trials; ++trial) {
                ExperimentSpec cell = spec;
                cell.problem = ProblemKind::Quadratic;
                cell.mu = mu;
                cell.delta = delta;
                cell.stop = StopRuleKind::ConstRule;  // single rule for the comparison
                cell.small_delta.reset();
                for (int s = 0; s < 2; ++s) {
                    cell.solver = s == 0 ? SolverKind::ConstStep : SolverKind::Adaptive;
                    ResolvedExperiment exp;
                    try {
                        exp = resolve_experiment(cell, /*data_stream_id=*/10 + trial);
                    } catch (const InvalidConfigError& e) {
                        log << "error: " << e.what() << "\n";
                        return 2;
                    }
                    if (!header_written) {
                        out << exp.header();
                        out << "mu,delta,trial,solver,N,N_star,dist_from_x0,grad_ratio,f_gap,"
                               "stop\n";
                        header_written = true;
                    }
                    const auto t0 = std::chrono::steady_clock::now();
                    const RunResult run =
                        execute(exp, /*stream_id=*/100 + static_cast<std::uint64_t>(trial),
                                /*record_trajectory=*/false);
                    const double ms = elapsed_ms(t0);
                    if (run.stop_reason == StopReason::GradientOverflow) {
                        log << "numeric overflow in cell mu=" << mu << " delta=" << delta << "\n";
                        return 3;
                    }
                    const auto& last = run.records.back();
                    TheoryInputs inp = theory_inputs_for(exp, run);
                    const std::int64_t n_star = budget_const(inp);
                    out << fmt(mu) << ',' << fmt(delta) << ',' << trial << ','
                        << to_string(*cell.solver) << ',' << run.stop_index() << ',' << n_star
                        << ',' << fmt(last.dist_from_x0) << ','
                        << fmt(last.exact_grad_norm / delta) << ',' << fmt(last.f_gap) << ','
                        << to_string(run.stop_reason) << '\n';
                    mean[s].n += static_cast<double>(run.stop_index());
                    mean[s].dist += last.dist_from_x0;
                    mean[s].ratio += last.exact_grad_norm / delta;
                    mean[s].gap += last.f_gap;
                    log << "mu=" << fmt(mu) << " delta=" << fmt(delta) << " trial=" << trial
                        << " solver=" << to_string(*cell.solver) << " N=" << run.stop_index()
                        << " (" << fmt(ms) << " ms)\n";
                }
            }
            for (int s = 0; s < 2; ++s) {
                const double t = spec.trials;
                out << fmt(mu) << ',' << fmt(delta) << ",mean,"
                    << (s == 0 ? "const" : "adaptive") << ',' << fmt(mean[s].n / t) << ",,"
                    << fmt(mean[s].dist / t) << ',' << fmt(mean[s].ratio / t) << ','
                    << fmt(mean[s].gap / t) << ",\n";
            }
        }
    }
    log << "wrote " << out_path << "\n";
    return 0;
}

int cmd_logreg(const ExperimentSpec& spec, std::ostream& log) {
    ExperimentSpec base = spec;
    base.problem = ProblemKind::LogReg;
    if (!base.delta) base.delta = 0.1;

    const std::string prefix = spec.out.empty() ? "logreg" : spec.out;
    const std::int64_t cap = std::min<std::int64_t>(spec.max_iters, 100000);

    // Regenerate the data once for serialization; resolve_experiment uses the
    // same (seed, stream 0) so the instances coincide.
    {
        RngStream data_rng(spec.seed, 0);
        const LogRegData data = generate_logreg_data(base.n.value_or(200), base.m.value_or(700),
                                                     base.k.value_or(10), data_rng);
        save_logreg_csv(data, prefix + "_data.csv");
    }

    // Reference optimum from a long exact-gradient run.
    ExperimentSpec ref = base;
    ref.noise = NoiseSelector::None;
    ref.delta = 0.0;
    ref.solver = SolverKind::ConstStep;
    ref.stop = StopRuleKind::None;
    ref.max_iters = cap;
    ResolvedExperiment ref_exp;
    try {
        ref_exp = resolve_experiment(ref);
    } catch (const InvalidConfigError& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
    log << "estimating reference optimum (" << cap << " exact iterations, L="
        << fmt(ref_exp.const_step_L) << ") ...\n";
    const RunResult ref_run = execute(ref_exp, /*stream_id=*/1, /*record_trajectory=*/false);
    const double f_star_est = ref_run.records.back().f_gap;  // raw f, f_star unknown
    log << "estimated f_star = " << fmt(f_star_est) << " (estimate, not a closed form)\n";

    const auto run_and_write = [&](StopRuleKind rule, const std::string& tag,
                                   std::uint64_t stream) -> int {
        ExperimentSpec cell = base;
        cell.stop = rule;
        cell.max_iters = cap;
        ResolvedExperiment exp;
        try {
            exp = resolve_experiment(cell);
        } catch (const InvalidConfigError& e) {
            log << "error: " << e.what() << "\n";
            return 2;
        }
        const RunResult run = execute(exp, stream, /*record_trajectory=*/false);
        if (run.stop_reason == StopReason::GradientOverflow) {
            log << "numeric overflow in " << tag << " run\n";
            return 3;
        }
        const std::string csv = prefix + "_" + tag + ".csv";
        {
            std::ofstream out = open_out(csv);
            out << exp.header();
            out << "# estimated_f_star=" << fmt(f_star_est) << " (estimate)\n";
            out << "# stop_reason=" << to_string(run.stop_reason) << "\n";
            out << "k,f_gap,exact_grad_norm,tilde_grad_norm,dist_from_x0,L_k,inner_evals\n";
            for (const auto& r : run.records) {
                out << r.k << ',' << fmt(r.f_gap) << ',' << fmt(r.exact_grad_norm) << ','
                    << fmt(r.tilde_grad_norm) << ',' << fmt(r.dist_from_x0) << ",,\n";
            }
        }
        std::vector<double> ks, gnorm, tnorm, dist;
        ks.reserve(run.records.size());
        for (const auto& r : run.records) {
            ks.push_back(static_cast<double>(r.k));
            gnorm.push_back(r.exact_grad_norm);
            tnorm.push_back(r.tilde_grad_norm);
            dist.push_back(r.dist_from_x0);
        }
        write_curve(prefix + "_" + tag + "_grad_norm.dat", ks, gnorm);
        write_curve(prefix + "_" + tag + "_tilde_grad_norm.dat", ks, tnorm);
        write_curve(prefix + "_" + tag + "_dist.dat", ks, dist);
        log << tag << ": ";
        print_summary(exp, run, log);
        return 0;
    };

    if (int rc = run_and_write(spec.stop.value_or(StopRuleKind::ConstRule), "rule", 2)) return rc;
    if (int rc = run_and_write(StopRuleKind::None, "norule", 3)) return rc;
    log << "wrote " << prefix << "_*.csv and " << prefix << "_*.dat\n";
    return 0;
}

namespace {

int run_adaptive_table(const ExperimentSpec& spec, ProblemKind problem, std::ostream& log) {
    const std::vector<double> delta_grid =
        spec.delta ? std::vector<double>{*spec.delta} : std::vector<double>{1e-4, 1e-3, 1e-2};
    const bool rosen = problem == ProblemKind::Rosenbrock;
    const std::vector<NoiseSelector> noise_grid =
        spec.noise ? std::vector<NoiseSelector>{*spec.noise}
        : rosen ? std::vector<NoiseSelector>{NoiseSelector::Random, NoiseSelector::Antigradient,
                                             NoiseSelector::Constant}
                : std::vector<NoiseSelector>{NoiseSelector::Random};
    const std::vector<int> n_grid = rosen ? std::vector<int>{2}
                                   : spec.n ? std::vector<int>{*spec.n}
                                            : std::vector<int>{3, 5, 7};

    const std::string out_path =
        spec.out.empty() ? (rosen ? "rosenbrock.csv" : "nesterov_skokov.csv") : spec.out;
    std::ofstream out;
    try {
        out = open_out(out_path);
    } catch (const InvalidConfigError& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }

    bool header_written = false;
    std::uint64_t outer_idx = 0;
    for (NoiseSelector noise : noise_grid) {
        for (int n : n_grid) {
            for (double delta : delta_grid) {
                ExperimentSpec cell = spec;
                cell.problem = problem;
                cell.solver = SolverKind::Adaptive;
                cell.stop = spec.stop.value_or(StopRuleKind::AdaptiveRule);
                cell.noise = noise;
                cell.delta = delta;
                if (!cell.small_delta) cell.small_delta = delta * delta;
                if (!rosen) cell.n = n;
                ResolvedExperiment exp;
                try {
                    exp = resolve_experiment(cell);
                } catch (const InvalidConfigError& e) {
                    log << "error: " << e.what() << "\n";
                    return 2;
                }
                if (!header_written) {
                    out << exp.header();
                    out << (rosen ? "noise" : "n")
                        << ",delta,N,dist_from_x0,grad_ratio,f_gap,stop,inner_evals\n";
                    header_written = true;
                }
                const auto t0 = std::chrono::steady_clock::now();
                const RunResult run = execute(exp, /*stream_id=*/10 + outer_idx,
                                              /*record_trajectory=*/false);
                const double ms = elapsed_ms(t0);
                if (run.stop_reason == StopReason::GradientOverflow) {
                    log << "numeric overflow in cell delta=" << delta << "\n";
                    return 3;
                }
                const auto& last = run.records.back();
                if (rosen)
                    out << to_string(noise);
                else
                    out << n;
                out << ',' << fmt(delta) << ',' << run.stop_index() << ','
                    << fmt(last.dist_from_x0) << ',' << fmt(last.exact_grad_norm / delta) << ','
                    << fmt(last.f_gap) << ',' << to_string(run.stop_reason) << ','
                    << run.total_inner_evals() << '\n';
                log << (rosen ? std::string("noise=") + to_string(noise)
                              : "n=" + std::to_string(n))
                    << " delta=" << fmt(delta) << " N=" << run.stop_index() << " f_gap="
                    << fmt(last.f_gap) << " dist=" << fmt(last.dist_from_x0) << " (" << fmt(ms)
                    << " ms)\n";
            }
            ++outer_idx;
        }
    }
    log << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int cmd_rosenbrock(const ExperimentSpec& spec, std::ostream& log) {
    return run_adaptive_table(spec, ProblemKind::Rosenbrock, log);
}

int cmd_nesterov_skokov(const ExperimentSpec& spec, std::ostream& log) {
    return run_adaptive_table(spec, ProblemKind::NesterovSkokov, log);
}

int cmd_validate(std::uint64_t seed, std::ostream& log) {
    const std::vector<CheckResult> results = run_validation_suite(seed);
    bool all = true;
    for (const auto& r : results) {
        log << (r.pass ? "[ ok ] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) log << ": " << r.detail;
        log << "\n";
        all = all && r.pass;
    }
    log << (all ? "validation passed" : "validation FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace plgd
