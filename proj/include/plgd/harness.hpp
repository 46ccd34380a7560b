#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plgd/noise.hpp"
#include "plgd/objective.hpp"
#include "plgd/solvers.hpp"
#include "plgd/theory.hpp"

namespace plgd {

enum class ProblemKind { Quadratic, Simple3D, LogReg, Rosenbrock, NesterovSkokov };
enum class SolverKind { ConstStep, Adaptive };
enum class NoiseSelector { None, Random, Antigradient, Constant, FirstComponent };

const char* to_string(ProblemKind p);
const char* to_string(SolverKind s);
const char* to_string(NoiseSelector n);
const char* to_string(StopRuleKind r);

/// One experiment cell as specified on the command line / config file.
/// Empty optionals are resolved to per-problem defaults (recorded in every
/// output header) by resolve_experiment.
struct ExperimentSpec {
    ProblemKind problem = ProblemKind::Quadratic;
    std::optional<SolverKind> solver;
    std::optional<NoiseSelector> noise;
    std::optional<double> delta;        // default 1e-4 (0.1 for the logreg command)
    std::optional<double> small_delta;  // default delta^2/(16 L) when L is known, else delta^2
    std::optional<double> mu;           // quadratic spectrum lower end / simple3d mu
    std::optional<double> L;            // quadratic spectrum upper end / step override
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> m;
    std::uint64_t seed = 1;
    int trials = 1;
    std::optional<StopRuleKind> stop;
    std::int64_t max_iters = 1000000;
    std::string out;
};

/// A fully-resolved cell: objective, oracle ingredients, solver configs.
struct ResolvedExperiment {
    ExperimentSpec spec;  // with defaults substituted
    Objective objective;
    Vector x0;
    NoiseModel noise_model = NoiseModel::none();
    SolverKind solver = SolverKind::ConstStep;
    StopRule rule;
    double delta = 0.0;
    double small_delta = 0.0;
    double const_step_L = 1.0;  // constant-step 1/L
    double adaptive_L0 = 1.0;
    double adaptive_L_min = 0.0;
    // delta^2 > 16 L small_delta (when L is known); the adaptive budget and
    // gap guarantee are void without it and a warning is emitted.
    bool value_noise_premise_ok = true;

    /// '#'-prefixed lines recording every resolved value and the seed.
    std::string header() const;
};

/// data_stream_id seeds problem/data construction (quadratic spectra,
/// logistic-regression data); solver noise comes from the run stream
/// passed to execute().
ResolvedExperiment resolve_experiment(const ExperimentSpec& spec,
                                      std::uint64_t data_stream_id = 0);

/// Executes the resolved cell on the stream (spec.seed, stream_id).
RunResult execute(const ResolvedExperiment& exp, std::uint64_t stream_id,
                  bool record_trajectory = true);

/// Per-iteration CSV: header comments, then
/// k,f_gap,exact_grad_norm,tilde_grad_norm,dist_from_x0,L_k,inner_evals
/// with empty cells where a column does not apply.
void write_run_csv(const std::string& path, const ResolvedExperiment& exp, const RunResult& run);

/// Two-column (x, y) plot data.
void write_curve(const std::string& path, const std::vector<double>& xs,
                 const std::vector<double>& ys);

// Subcommand drivers. Return process exit codes: 0 ok, 1 validation
// failure, 2 usage error, 3 numeric overflow.
int cmd_run(const ExperimentSpec& spec, std::ostream& log);
int cmd_table_quadratic(const ExperimentSpec& spec, std::ostream& log);
int cmd_logreg(const ExperimentSpec& spec, std::ostream& log);
int cmd_rosenbrock(const ExperimentSpec& spec, std::ostream& log);
int cmd_nesterov_skokov(const ExperimentSpec& spec, std::ostream& log);
int cmd_validate(std::uint64_t seed, std::ostream& log);

}  // namespace plgd
