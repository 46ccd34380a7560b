#include "plgd/validate.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "plgd/harness.hpp"
#include "plgd/oracle.hpp"
#include "plgd/problems/logreg.hpp"
#include "plgd/problems/nesterov_skokov.hpp"
#include "plgd/problems/quadratic.hpp"
#include "plgd/problems/rosenbrock.hpp"
#include "plgd/problems/simple3d.hpp"
#include "plgd/theory.hpp"

namespace plgd {

namespace {

std::string num(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

}  // namespace

CheckResult check_gradient_consistency(const std::string& name, const Objective& objective,
                                       std::uint64_t seed, int points, double box) {
    RngStream rng(seed, 7001);
    double worst = 0.0;
    for (int p = 0; p < points; ++p) {
        Vector x(objective.dim);
        for (int i = 0; i < objective.dim; ++i) x[i] = rng.uniform(-box, box);
        const Vector analytic = objective.gradient(x);
        const Vector fd = finite_diff_gradient(objective, x, finite_diff_step(x));
        const double rel = (analytic - fd).norm() / std::max(analytic.norm(), 1e-12);
        worst = std::max(worst, rel);
    }
    CheckResult r;
    r.name = "gradient-vs-finite-diff: " + name;
    r.pass = worst <= 1e-6;
    r.detail = "worst rel err " + num(worst) + " over " + num(points) + " points";
    return r;
}

namespace {

CheckResult check_sphere_norms(std::uint64_t seed) {
    double worst = 0.0;
    for (int dim : {1, 2, 3, 5, 10, 50, 100, 500, 1000}) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            RngStream rng(seed + s, 7100 + static_cast<std::uint64_t>(dim));
            const Eigen::VectorXd u = sample_unit_sphere(dim, rng);
            worst = std::max(worst, std::abs(u.norm() - 1.0));
        }
    }
    CheckResult r;
    r.name = "sphere-sample-norms";
    r.pass = worst <= 1e-12;
    r.detail = "worst |norm-1| = " + num(worst);
    return r;
}

CheckResult check_oracle_bounds(std::uint64_t seed) {
    RngStream data_rng(seed, 7200);
    const auto problem = QuadraticDiagProblem::sample(20, 2, 0.1, 1.0, data_rng);
    const Objective obj = problem.objective();
    const double delta = 0.37;
    const double small_delta = 0.021;

    const NoiseModel models[] = {NoiseModel::none(), NoiseModel::random_sphere(),
                                 NoiseModel::antigradient(),
                                 NoiseModel::constant(Vector::Ones(20)),
                                 NoiseModel::first_component_bias()};
    double worst_grad = 0.0;
    double worst_val = 0.0;
    RngStream point_rng(seed, 7201);
    for (const auto& model : models) {
        InexactOracle oracle(obj, delta, small_delta, model, RngStream(seed, 7202));
        for (int q = 0; q < 2000; ++q) {
            const Vector x = point_rng.gaussian_vector(20);
            Vector exact;
            const Vector tilde = oracle.gradient(x, &exact);
            worst_grad = std::max(worst_grad, (exact - tilde).norm() - delta);
            worst_val = std::max(worst_val, std::abs(oracle.value(x) - obj.value(x)) - small_delta);
        }
    }
    CheckResult r;
    r.name = "oracle-error-bounds";
    r.pass = worst_grad <= delta * 1e-12 && worst_val <= small_delta * 1e-12;
    r.detail = "grad excess " + num(worst_grad) + ", value excess " + num(worst_val) +
               " over 10000 queries";
    return r;
}

bool identical_runs(const RunResult& a, const RunResult& b) {
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const auto& ra = a.records[i];
        const auto& rb = b.records[i];
        const bool lk_same =
            (std::isnan(ra.L_k) && std::isnan(rb.L_k)) || ra.L_k == rb.L_k;
        if (ra.k != rb.k || ra.f_gap != rb.f_gap || ra.exact_grad_norm != rb.exact_grad_norm ||
            ra.tilde_grad_norm != rb.tilde_grad_norm || ra.dist_from_x0 != rb.dist_from_x0 ||
            !lk_same || ra.inner_evals != rb.inner_evals)
            return false;
    }
    return a.x_hat == b.x_hat && a.stop_reason == b.stop_reason;
}

CheckResult check_determinism(std::uint64_t seed) {
    ExperimentSpec spec;
    spec.problem = ProblemKind::Quadratic;
    spec.n = 20;
    spec.k = 2;
    spec.mu = 0.1;
    spec.delta = 1e-3;
    spec.seed = seed;
    bool pass = true;
    for (SolverKind solver : {SolverKind::ConstStep, SolverKind::Adaptive}) {
        spec.solver = solver;
        const ResolvedExperiment exp = resolve_experiment(spec);
        const RunResult r1 = execute(exp, 5);
        const RunResult r2 = execute(exp, 5);
        pass = pass && identical_runs(r1, r2);
    }
    CheckResult r;
    r.name = "determinism-replay";
    r.pass = pass;
    r.detail = "two runs per solver with identical streams";
    return r;
}

CheckResult check_certificates(std::uint64_t seed) {
    ExperimentSpec spec;
    spec.problem = ProblemKind::Quadratic;
    spec.n = 20;
    spec.k = 2;
    spec.mu = 0.1;
    spec.delta = 1e-3;
    spec.seed = seed;
    bool pass = true;
    std::string detail;
    for (SolverKind solver : {SolverKind::ConstStep, SolverKind::Adaptive}) {
        spec.solver = solver;
        const ResolvedExperiment exp = resolve_experiment(spec);
        const RunResult run = execute(exp, 6);
        TheoryInputs inp;
        inp.L = 1.0;
        inp.mu = 0.1;
        inp.delta = exp.delta;
        inp.small_delta = exp.small_delta;
        inp.gap0 = run.records.front().f_gap;
        inp.L_min = exp.adaptive_L_min;
        const CertificateReport report = verify_certificates(
            run, exp.objective, inp,
            solver == SolverKind::ConstStep ? SolverMode::ConstStep : SolverMode::Adaptive);
        pass = pass && report.pass();
        detail += std::string(to_string(solver)) + " worst " + num(report.worst_violation()) + "; ";
    }
    CheckResult r;
    r.name = "certificate-replay";
    r.pass = pass;
    r.detail = detail;
    return r;
}

CheckResult check_minor_recursion(std::uint64_t seed) {
    using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    RngStream rng(seed, 7300);
    double worst = 0.0;
    bool ordered = true;
    for (int n = 2; n <= 8; ++n) {
        NesterovSkokovProblem problem{n};
        for (int trial = 0; trial < 50; ++trial) {
            const Vector x = rng.gaussian_vector(n);
            const std::vector<double> minors = problem.minor_sequence(x);
            // Dense oracle: assemble the residual Jacobian and take leading
            // principal determinants of J J^T in extended precision.
            LongMatrix J = LongMatrix::Zero(n, n);
            J(0, 0) = 0.5L;
            for (int i = 1; i < n; ++i) {
                J(i, i) = 1.0L;
                J(i, i - 1) = -4.0L * static_cast<long double>(x[i - 1]);
            }
            const LongMatrix M = J * J.transpose();
            for (int j = 1; j <= n; ++j) {
                const long double dense = M.topLeftCorner(j, j).determinant();
                const double rel = static_cast<double>(
                    std::abs(minors[j - 1] - dense) / std::max(std::abs(dense), 1e-300L));
                worst = std::max(worst, rel);
                ordered = ordered && minors[j - 1] > 0.0 &&
                          (j == 1 || minors[j - 1] >= minors[j - 2] - 1e-12);
            }
        }
    }
    CheckResult r;
    r.name = "minor-recursion-vs-dense-determinants";
    r.pass = worst <= 1e-8 && ordered;
    r.detail = "worst rel err " + num(worst) + " for n <= 8" +
               (ordered ? "" : "; ordering violated");
    return r;
}

CheckResult check_quadratic_properties(std::uint64_t seed) {
    RngStream data_rng(seed, 7400);
    const auto problem = QuadraticDiagProblem::sample(30, 5, 0.05, 2.0, data_rng);
    RngStream rng(seed, 7401);
    bool pass = true;
    for (int i = 0; i < 1000; ++i) {
        const Vector x = 10.0 * rng.gaussian_vector(30);
        const double f = problem.value(x);
        const double g2 = problem.gradient(x).squaredNorm();
        pass = pass && f >= 0.0 && f <= g2 / (2.0 * problem.mu()) + 1e-12 * (1.0 + f);
    }
    CheckResult r;
    r.name = "quadratic-pl-inequality";
    r.pass = pass;
    r.detail = "f in [0, |grad|^2/(2 mu)] at 1000 points";
    return r;
}

CheckResult check_logreg_invariance(std::uint64_t seed) {
    RngStream data_rng(seed, 7500);
    const LogRegData data = generate_logreg_data(40, 120, 5, data_rng);
    // Basis of the row span from the first k rows (they are orthonormal).
    Eigen::MatrixXd basis(40, 5);
    for (int j = 0; j < 5; ++j) basis.col(j) = data.W.row(j).transpose();
    RngStream rng(seed, 7501);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Vector x = rng.gaussian_vector(40);
        Vector w = rng.gaussian_vector(40);
        w -= basis * (basis.transpose() * w);  // project out the row span
        worst = std::max(worst,
                         std::abs(logreg_value(data, x + w) - logreg_value(data, x)));
    }
    CheckResult r;
    r.name = "logreg-null-space-invariance";
    r.pass = worst <= 1e-10;
    r.detail = "worst |f(x+w)-f(x)| = " + num(worst);
    return r;
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
    std::vector<CheckResult> results;

    {
        RngStream data_rng(seed, 7000);
        const auto quadratic = QuadraticDiagProblem::sample(30, 5, 0.05, 2.0, data_rng);
        results.push_back(
            check_gradient_consistency("quadratic", quadratic.objective(), seed, 20));
        results.push_back(
            check_gradient_consistency("simple3d", Simple3DProblem{1.0, 0.1}.objective(), seed, 20));
        const LogRegData data = generate_logreg_data(40, 120, 5, data_rng);
        results.push_back(check_gradient_consistency("logreg", logreg_objective(data), seed, 20));
        results.push_back(
            check_gradient_consistency("rosenbrock", rosenbrock_objective(), seed, 20));
        results.push_back(check_gradient_consistency(
            "nesterov-skokov", NesterovSkokovProblem{5}.objective(), seed, 20));
    }
    results.push_back(check_sphere_norms(seed));
    results.push_back(check_oracle_bounds(seed));
    results.push_back(check_determinism(seed));
    results.push_back(check_certificates(seed));
    results.push_back(check_minor_recursion(seed));
    results.push_back(check_quadratic_properties(seed));
    results.push_back(check_logreg_invariance(seed));
    return results;
}

}  // namespace plgd
