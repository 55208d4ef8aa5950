// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rsfade/harness.hpp"
#include "rsfade/verify.hpp"

namespace {

using namespace rsfade;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double max_rel_gap(double ours, double reference) {
    return std::abs(ours - reference) / reference;
}

// ---------------------------------------------------------------------------
// Frozen reference data for the benchmark ladders: max-norm errors at
// t = 1 with tau = h, and the observed orders they imply.

struct ReferenceGroup {
    double alpha;
    double beta;
    std::vector<double> errors;
    std::vector<double> orders;  // one fewer than errors
};

const std::vector<ReferenceGroup> kExample1Reference = {
    {0.0, 1.2, {1.6781e-3, 3.9728e-4, 9.4291e-5, 2.2442e-5, 5.3679e-6},
     {2.08, 2.07, 2.07, 2.06}},
    {0.0, 1.5, {1.8350e-3, 4.3608e-4, 1.0349e-4, 2.4538e-5, 5.8261e-6},
     {2.07, 2.08, 2.08, 2.07}},
    {0.0, 1.8, {1.7827e-3, 4.3250e-4, 1.0482e-4, 2.5351e-5, 6.1256e-6},
     {2.04, 2.04, 2.05, 2.05}},
};

const std::vector<ReferenceGroup> kExample2Reference = {
    {0.1, 1.2, {2.8322e-5, 7.1828e-6, 1.8334e-6, 4.6575e-7, 1.1756e-7}, {}},
    {0.1, 1.5, {2.8689e-5, 7.0817e-6, 1.7860e-6, 4.5086e-7, 1.1343e-7}, {}},
    {0.1, 1.8, {2.4212e-5, 5.7905e-6, 1.4386e-6, 3.5998e-7, 9.0132e-8}, {}},
    {0.5, 1.2, {4.2703e-5, 1.0824e-5, 2.7622e-6, 7.0166e-7, 1.7712e-7}, {}},
    {0.5, 1.5, {4.3144e-5, 1.0665e-5, 2.6913e-6, 6.7960e-7, 1.7101e-7}, {}},
    {0.5, 1.8, {3.6635e-5, 8.7850e-6, 2.1851e-6, 5.4714e-7, 1.3704e-7}, {}},
    {0.9, 1.2, {6.6633e-5, 1.6852e-5, 4.3006e-6, 1.0929e-6, 2.7596e-7}, {}},
    {0.9, 1.5, {6.6253e-5, 1.6414e-5, 4.1491e-6, 1.0488e-6, 2.6409e-7}, {}},
    {0.9, 1.8, {5.6545e-5, 1.3633e-5, 3.4009e-6, 8.5302e-7, 2.1385e-7}, {}},
};

const std::vector<ReferenceGroup> kRemReference = {
    {0.1, 1.8, {2.5866e-8, 1.7240e-9, 1.1610e-10, 7.6467e-12}, {}},
    {0.5, 1.8, {3.9130e-8, 2.6351e-9, 1.7772e-10, 1.1768e-11}, {}},
    {0.9, 1.8, {6.2601e-8, 4.3563e-9, 2.9783e-10, 1.9906e-11}, {}},
};

const ReportGroup* find_group(const ConvergenceReport& report, double alpha, double beta) {
    for (const auto& g : report.groups) {
        if (std::abs(g.alpha - alpha) < 1e-12 && std::abs(g.beta - beta) < 1e-12) return &g;
    }
    return nullptr;
}

Outcome suite_outcome(const verify::Suite& suite) {
    Outcome out;
    int failed = 0;
    for (const auto& c : suite.checks)
        if (!c.ok()) ++failed;
    out.pass = failed == 0;
    std::ostringstream detail;
    detail << suite.checks.size() - failed << "/" << suite.checks.size() << " checks";
    if (failed > 0) {
        for (const auto& c : suite.checks)
            if (!c.ok()) detail << "; failed: " << c.name;
    }
    out.detail = detail.str();
    return out;
}

// criterion 1: coefficient laws on the order grid
Outcome criterion_coefficient_laws() { return suite_outcome(verify::coefficient_laws()); }

// criterion 2: second-order operator accuracy against the monomial rule
Outcome criterion_operator_accuracy() { return suite_outcome(verify::operator_accuracy()); }

// criterion 3: diagonal dominance, SPD, resolvent norm bounds
Outcome criterion_matrix_structure() { return suite_outcome(verify::matrix_structure()); }

// criterion 4: unconditional stability and perturbation contraction
Outcome criterion_stability() { return suite_outcome(verify::stability()); }

// criterion 5: example1 ladder vs reference errors (25%) and orders (+-0.15)
Outcome criterion_example1_table() {
    RunConfig config;
    config.problem = "example1";
    config.betas = {1.2, 1.5, 1.8};
    config.ladder = {8, 16, 32, 64, 128};
    config.threads = 2;
    const ConvergenceReport report = run_convergence(config);

    Outcome out;
    double worst_err = 0.0, worst_order = 0.0;
    for (const auto& ref : kExample1Reference) {
        const ReportGroup* group = find_group(report, ref.alpha, ref.beta);
        if (group == nullptr || group->rows.size() != ref.errors.size()) {
            return {false, "missing ladder group"};
        }
        for (std::size_t k = 0; k < ref.errors.size(); ++k) {
            worst_err = std::max(worst_err, max_rel_gap(group->rows[k].error, ref.errors[k]));
            if (k > 0) {
                worst_order =
                    std::max(worst_order, std::abs(*group->rows[k].order - ref.orders[k - 1]));
            }
        }
    }
    out.pass = worst_err <= 0.25 && worst_order <= 0.15;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max error deviation %.3g%%, max order deviation %.3g", worst_err * 100.0,
                  worst_order);
    out.detail = detail;
    return out;
}

// criterion 6: example2 ladder, orders in [1.9, 2.2], magnitudes within 25%
Outcome criterion_example2_table() {
    RunConfig config;
    config.problem = "example2";
    config.alphas = {0.1, 0.5, 0.9};
    config.betas = {1.2, 1.5, 1.8};
    config.ladder = {8, 16, 32, 64, 128};
    config.threads = 2;
    const ConvergenceReport report = run_convergence(config);

    Outcome out;
    double worst_err = 0.0;
    double order_lo = 1e300, order_hi = -1e300;
    for (const auto& ref : kExample2Reference) {
        const ReportGroup* group = find_group(report, ref.alpha, ref.beta);
        if (group == nullptr) return {false, "missing ladder group"};
        for (std::size_t k = 0; k < ref.errors.size(); ++k) {
            worst_err = std::max(worst_err, max_rel_gap(group->rows[k].error, ref.errors[k]));
            if (k > 0) {
                order_lo = std::min(order_lo, *group->rows[k].order);
                order_hi = std::max(order_hi, *group->rows[k].order);
            }
        }
    }
    out.pass = worst_err <= 0.25 && order_lo >= 1.9 && order_hi <= 2.2;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max error deviation %.3g%%, orders [%.4g, %.4g]",
                  worst_err * 100.0, order_lo, order_hi);
    out.detail = detail;
    return out;
}

// criterion 7: Richardson-extrapolated ladder, orders in [3.7, 4.0],
// magnitudes within 50% of the reference values
Outcome criterion_rem_table() {
    RunConfig config;
    config.problem = "example2";
    config.alphas = {0.1, 0.5, 0.9};
    config.betas = {1.8};
    config.ladder = {8, 16, 32, 64};
    config.rem = true;
    config.threads = 2;
    const ConvergenceReport report = run_convergence(config);

    Outcome out;
    double worst_err = 0.0;
    double order_lo = 1e300, order_hi = -1e300;
    for (const auto& ref : kRemReference) {
        const ReportGroup* group = find_group(report, ref.alpha, ref.beta);
        if (group == nullptr) return {false, "missing ladder group"};
        for (std::size_t k = 0; k < ref.errors.size(); ++k) {
            worst_err = std::max(worst_err, max_rel_gap(group->rows[k].error, ref.errors[k]));
            if (k > 0) {
                order_lo = std::min(order_lo, *group->rows[k].order);
                order_hi = std::max(order_hi, *group->rows[k].order);
            }
        }
    }
    out.pass = worst_err <= 0.50 && order_lo >= 3.7 && order_hi <= 4.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max error deviation %.3g%%, orders [%.4g, %.4g]",
                  worst_err * 100.0, order_lo, order_hi);
    out.detail = detail;
    return out;
}

// criterion 8: example3 numeric field vs the truncated-series reference at
// T = 0.4 with h = tau = 1/100; max gap below 5e-3
Outcome criterion_series_profile() {
    const ProblemSpec problem = example3(0.4, 1.8);
    const Grid grid(problem.length, 314, 0.4, 40);  // h = pi/314, tau = 1/100
    const GridSolution solution = integrate(problem, grid, SolverChoice{}, Keep::FinalOnly);
    double gap = 0.0;
    for (std::size_t i = 0; i < grid.interior_count(); ++i) {
        gap = std::max(gap,
                       std::abs(solution.final_row()[i] - problem.exact(grid.x(i + 1), 0.4)));
    }
    Outcome out;
    out.pass = gap <= 5e-3;
    std::ostringstream detail;
    detail << "max gap " << gap << " (limit 5e-3)";
    out.detail = detail.str();
    return out;
}

// criterion 9: solver equivalence and matvec consistency at m = 64
Outcome criterion_solver_equivalence() {
    const Grid grid(1.0, 64, 1.0, 64);
    const RieszSystem sys(grid, FractionalOrder::advection(0.5),
                          FractionalOrder::dispersion(1.5), 2.0, 2.0);
    SolverChoice dense;
    SolverChoice cg;
    cg.kind = SolverKind::ConjugateGradient;
    const CnSolver dense_solver(sys, dense);
    const CnSolver cg_solver(sys, cg);

    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst_solver = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> b(sys.size());
        for (auto& v : b) v = unif(rng);
        const auto xd = dense_solver.solve(b);
        const auto xc = cg_solver.solve(b);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            num += (xd[i] - xc[i]) * (xd[i] - xc[i]);
            den += xd[i] * xd[i];
        }
        worst_solver = std::max(worst_solver, std::sqrt(num / den));
    }

    const DenseMatrix dense_d = sys.dense();
    double worst_matvec = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> v(sys.size());
        for (auto& x : v) x = unif(rng);
        const auto fast = sys.apply(v);
        const auto slow = dense_d.multiply(v);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            num += (fast[i] - slow[i]) * (fast[i] - slow[i]);
            den += slow[i] * slow[i];
        }
        worst_matvec = std::max(worst_matvec, std::sqrt(num / den));
    }

    Outcome out;
    out.pass = worst_solver <= 1e-10 && worst_matvec <= 1e-13;
    std::ostringstream detail;
    detail << "solver gap " << worst_solver << ", matvec gap " << worst_matvec;
    out.detail = detail.str();
    return out;
}

// criterion 10: the beta = 2, K_alpha = 0 step equals an independently
// assembled tridiagonal Crank-Nicolson heat step to 1e-12
Outcome criterion_classical_limit() {
    const std::size_t m = 32;
    const double k_beta = 1.0;
    const Grid grid(1.0, m, 1.0, 64);
    const RieszSystem sys(grid, FractionalOrder::advection(0.5),
                          FractionalOrder::dispersion(2.0), 0.0, k_beta);
    const std::size_t n = sys.size();
    const double tau = grid.tau();
    const double h = grid.h();

    std::vector<double> u_prev(n), f_prev(n), f_curr(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i + 1);
        u_prev[i] = x * x * (1.0 - x) * (1.0 - x);
        f_prev[i] = std::sin(2.0 * x);
        f_curr[i] = std::sin(2.0 * x + tau);
    }
    const auto ours = cn_step(sys, u_prev, f_prev, f_curr, tau, SolverChoice{});

    // Thomas solve of (I - r delta^2) u = (I + r delta^2) u_prev + tau/2 (f+f)
    const double r = k_beta * tau / (2.0 * h * h);
    std::vector<double> diag(n, 1.0 + 2.0 * r), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? u_prev[i - 1] : 0.0;
        const double right = i + 1 < n ? u_prev[i + 1] : 0.0;
        rhs[i] = (1.0 - 2.0 * r) * u_prev[i] + r * (left + right) +
                 0.5 * tau * (f_prev[i] + f_curr[i]);
    }
    std::vector<double> c(n), d(n);
    c[0] = -r / diag[0];
    d[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double denom = diag[i] + r * c[i - 1];
        c[i] = -r / denom;
        d[i] = (rhs[i] + r * d[i - 1]) / denom;
    }
    std::vector<double> oracle(n);
    oracle[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i > 0; --i)
        oracle[i - 1] = d[i - 1] - c[i - 1] * oracle[i];

    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(ours[i] - oracle[i]));
    Outcome out;
    out.pass = gap <= 1e-12;
    std::ostringstream detail;
    detail << "max step gap " << gap;
    out.detail = detail.str();
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "coefficient law suite", 1.0, criterion_coefficient_laws},
        {2, "operator accuracy vs monomial rule", 5.0, criterion_operator_accuracy},
        {3, "matrix structure suite", 10.0, criterion_matrix_structure},
        {4, "stability suite", 10.0, criterion_stability},
        {5, "example1 ladder vs reference table", 60.0, criterion_example1_table},
        {6, "example2 ladder vs reference table", 120.0, criterion_example2_table},
        {7, "extrapolated ladder vs reference table", 120.0, criterion_rem_table},
        {8, "example3 profile vs series reference", 30.0, criterion_series_profile},
        {9, "solver equivalence and matvec consistency", 5.0, criterion_solver_equivalence},
        {10, "classical-limit step oracle", 1.0, criterion_classical_limit},
    };

    bool all_pass = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds < criterion.time_limit_seconds;
        const bool pass = outcome.pass && in_budget;
        all_pass = all_pass && pass;
        std::printf("[%2d] %-44s %s  (%.2f s%s)  %s\n", criterion.id, criterion.name,
                    pass ? "PASS" : "FAIL", seconds,
                    in_budget ? "" : ", over budget", outcome.detail.c_str());
    }
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
