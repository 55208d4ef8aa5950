#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rsfade/extrapolation.hpp"
#include "rsfade/report.hpp"
#include "rsfade/stepper.hpp"

namespace rsfade {

/// Configuration of a convergence study (or a single solve). The ladder
/// lists space subinterval counts m; the time step follows the space step
/// via tau ~= tau_over_h * h, so refinements stay in lockstep.
struct RunConfig {
    std::string problem = "example1";  // example1|example2|example3|file:<path>
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<std::size_t> ladder;
    double final_time = 1.0;
    double tau_over_h = 1.0;
    ErrorNorm norm = ErrorNorm::Max;
    bool rem = false;
    SolverChoice solver;
    std::size_t threads = 1;
    std::string out;

    void validate() const;  // throws on inconsistent configuration
};

/// Reads a flat key/value JSON document holding RunConfig fields.
/// Unknown keys are rejected.
RunConfig load_config(const std::filesystem::path& path);

/// Builds a problem instance from an id. `file:<path>` loads a custom
/// homogeneous problem description (JSON); the built-in ids dispatch to
/// the example constructors. alpha is ignored where the problem has none.
ProblemSpec make_problem(const std::string& id, double alpha, double beta);

/// Loads a custom problem: JSON with L, alpha, beta, K_alpha, K_beta and
/// a polynomial initial condition (coefficient list, constant term
/// first). The source is zero and no exact solution is attached.
ProblemSpec load_problem_file(const std::filesystem::path& path);

/// Number of time steps giving tau ~= tau_over_h * h for a ladder entry.
std::size_t steps_for(double final_time, double length, std::size_t m, double tau_over_h);

/// Runs the refinement ladder for every (alpha, beta) combination,
/// measuring the error against the exact solution at t = T on the
/// interior nodes. Entries run on a small worker pool when
/// config.threads > 1; the report ordering is deterministic either way.
/// Throws if the problem lacks an exact solution.
ConvergenceReport run_convergence(const RunConfig& config);

/// Same ladder driver over explicit problem instances (the id and
/// alpha/beta lists in the config are ignored).
ConvergenceReport run_convergence(const RunConfig& config,
                                  std::span<const ProblemSpec> problems);

/// Writes profile columns (x, numeric, and exact when available) at the
/// requested output times for external plotting. Each time must lie on
/// the time grid; otherwise the error names the nearest grid times.
void emit_profile(const ProblemSpec& problem, const Grid& grid,
                  std::span<const double> times, const SolverChoice& choice,
                  const std::filesystem::path& path);

}  // namespace rsfade
