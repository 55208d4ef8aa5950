// Command-line front end: single solves with profile export, convergence
// ladders (plain and Richardson-extrapolated), and the built-in
// verification suites.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsfade/harness.hpp"
#include "rsfade/verify.hpp"

namespace {

struct CliOptions {
    rsfade::RunConfig config;
    std::string config_path;
    double alpha = 0.5;  // single-value forms used by `solve`
    double beta = 1.5;
    std::size_t m = 64;
    std::size_t steps = 0;  // 0: derive from tau-over-h
    std::vector<double> times;
};

void add_common_options(CLI::App& cmd, CliOptions& opt) {
    cmd.add_option("--problem", opt.config.problem,
                   "problem id: example1|example2|example3|file:<path>");
    cmd.add_option("--T", opt.config.final_time, "final time");
    cmd.add_option("--tau-over-h", opt.config.tau_over_h, "time step over space step");
    cmd.add_option("--cg-tol", opt.config.solver.cg_tol, "CG relative residual tolerance");
    cmd.add_option("--threads", opt.config.threads, "worker threads for ladder entries");
    cmd.add_option("--out", opt.config.out, "output path");
    cmd.add_option("--config", opt.config_path, "JSON config file (flags override it)");
    cmd.add_option_function<std::string>(
           "--solver",
           [&opt](const std::string& s) {
               opt.config.solver.kind = s == "cg" ? rsfade::SolverKind::ConjugateGradient
                                                  : rsfade::SolverKind::DenseDirect;
           },
           "linear solver")
        ->check(CLI::IsMember({"dense", "cg"}));
    cmd.add_option_function<std::string>(
           "--norm",
           [&opt](const std::string& s) { opt.config.norm = rsfade::parse_norm(s); },
           "error norm for ladder reports")
        ->check(CLI::IsMember({"max", "l2"}));
}

// Flags the user actually passed override values from --config.
void merge_config_file(const CLI::App& cmd, CliOptions& opt) {
    if (opt.config_path.empty()) return;
    rsfade::RunConfig file = rsfade::load_config(opt.config_path);

    if (cmd.count("--problem") == 0) opt.config.problem = file.problem;
    if (cmd.count("--alpha") == 0) opt.config.alphas = file.alphas;
    if (cmd.count("--beta") == 0) opt.config.betas = file.betas;
    if (cmd.count("--ladder") == 0) opt.config.ladder = file.ladder;
    if (cmd.count("--T") == 0) opt.config.final_time = file.final_time;
    if (cmd.count("--tau-over-h") == 0) opt.config.tau_over_h = file.tau_over_h;
    if (cmd.count("--norm") == 0) opt.config.norm = file.norm;
    if (cmd.count("--solver") == 0) opt.config.solver.kind = file.solver.kind;
    if (cmd.count("--cg-tol") == 0) opt.config.solver.cg_tol = file.solver.cg_tol;
    if (cmd.count("--threads") == 0) opt.config.threads = file.threads;
    if (cmd.count("--out") == 0 && !file.out.empty()) opt.config.out = file.out;
}

int run_converge(const CLI::App& cmd, CliOptions& opt, bool rem) {
    merge_config_file(cmd, opt);
    opt.config.rem = rem;
    const rsfade::ConvergenceReport report = rsfade::run_convergence(opt.config);
    std::cout << rsfade::format_text_table(report);
    if (!opt.config.out.empty()) {
        rsfade::emit_table(report, opt.config.out);
        std::cout << "wrote " << opt.config.out << "\n";
    }
    return 0;
}

int run_solve(const CLI::App& cmd, CliOptions& opt) {
    merge_config_file(cmd, opt);
    if (cmd.count("--alpha") == 0 && !opt.config.alphas.empty())
        opt.alpha = opt.config.alphas.front();
    if (cmd.count("--beta") == 0 && !opt.config.betas.empty())
        opt.beta = opt.config.betas.front();

    const rsfade::ProblemSpec problem =
        rsfade::make_problem(opt.config.problem, opt.alpha, opt.beta);
    const std::size_t steps = opt.steps > 0
                                  ? opt.steps
                                  : rsfade::steps_for(opt.config.final_time, problem.length,
                                                      opt.m, opt.config.tau_over_h);
    const rsfade::Grid grid(problem.length, opt.m, opt.config.final_time, steps);
    if (opt.times.empty()) opt.times.push_back(opt.config.final_time);
    const std::string out = opt.config.out.empty() ? "profile.csv" : opt.config.out;
    rsfade::emit_profile(problem, grid, opt.times, opt.config.solver, out);
    std::printf("wrote %s (m = %zu, tau = %.6g, %zu steps)\n", out.c_str(), opt.m,
                grid.tau(), steps);
    return 0;
}

int run_verify() {
    bool ok = true;
    for (const rsfade::verify::Suite& suite : rsfade::verify::run_all()) {
        std::printf("%s (%.2f s)\n", suite.name.c_str(), suite.wall_seconds);
        for (const auto& check : suite.checks) {
            const char* status = check.outcome == rsfade::CheckOutcome::Fail ? "FAIL"
                                 : check.outcome == rsfade::CheckOutcome::PassAtBoundary
                                     ? "PASS (boundary)"
                                     : "PASS";
            std::printf("  %-60s %s\n", check.name.c_str(), status);
            ok = ok && check.ok();
        }
    }
    std::printf("verification %s\n", ok ? "PASSED" : "FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz space-fractional advection-dispersion solver"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* solve = app.add_subcommand("solve", "single run, writes profile columns");
    add_common_options(*solve, opt);
    solve->add_option("--alpha", opt.alpha, "advection order in (0,1)");
    solve->add_option("--beta", opt.beta, "dispersion order in (1,2]");
    solve->add_option("--m", opt.m, "space subintervals");
    solve->add_option("--steps", opt.steps, "time steps (overrides --tau-over-h)");
    solve->add_option("--times", opt.times, "output times (grid times)")->delimiter(',');

    CLI::App* converge = app.add_subcommand("converge", "refinement ladder, writes table");
    add_common_options(*converge, opt);
    converge->add_option("--alpha", opt.config.alphas, "advection orders")->delimiter(',');
    converge->add_option("--beta", opt.config.betas, "dispersion orders")->delimiter(',');
    converge->add_option("--ladder", opt.config.ladder, "subinterval counts, increasing")
        ->delimiter(',');

    CLI::App* rem = app.add_subcommand("rem", "Richardson-extrapolated ladder");
    add_common_options(*rem, opt);
    rem->add_option("--alpha", opt.config.alphas, "advection orders")->delimiter(',');
    rem->add_option("--beta", opt.config.betas, "dispersion orders")->delimiter(',');
    rem->add_option("--ladder", opt.config.ladder, "subinterval counts, increasing")
        ->delimiter(',');

    app.add_subcommand("verify", "run the built-in property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(*solve, opt);
        if (converge->parsed()) return run_converge(*converge, opt, false);
        if (rem->parsed()) return run_converge(*rem, opt, true);
        return run_verify();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
