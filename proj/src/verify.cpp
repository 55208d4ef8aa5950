#include "rsfade/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "rsfade/dense.hpp"
#include "rsfade/discretization.hpp"
#include "rsfade/stepper.hpp"

namespace rsfade::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

PropertyCheck margin_check(std::string name, double margin) {
    PropertyCheck c;
    c.name = std::move(name);
    c.margin = margin;
    c.outcome = margin >= 0.0 ? CheckOutcome::Pass : CheckOutcome::Fail;
    return c;
}

const std::vector<double>& order_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (int k = 1; k <= 9; ++k) g.push_back(0.1 * k);
        for (int k = 11; k <= 20; ++k) g.push_back(0.1 * k);
        return g;
    }();
    return grid;
}

}  // namespace

bool Suite::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.ok(); });
}

Suite coefficient_laws() {
    const auto start = Clock::now();
    Suite suite{"coefficient laws", {}, 0.0};
    for (double gamma : order_grid()) {
        const LemmaReport report = verify_coefficient_lemmas(GrunwaldSeq::make(gamma, 256));
        double worst = 1.0;
        for (const auto& c : report.checks) {
            if (!c.ok()) worst = std::min(worst, -1.0);
        }
        std::ostringstream name;
        name << "coefficient laws at gamma = " << gamma;
        suite.checks.push_back(margin_check(name.str(), worst));
    }
    suite.wall_seconds = seconds_since(start);
    return suite;
}

namespace {

// Analytic fractional derivative of x^3 (1-x)^3 through the monomial
// rule D^gamma x^p = Gamma(p+1)/Gamma(p+1-gamma) x^{p-gamma}. Kept local
// to the verification suite so it stays independent of the operator
// implementation it cross-checks.
double cubic_profile(double x) {
    const double y = x * (1.0 - x);
    return y * y * y;
}

double cubic_left_rl(double x, double gamma) {
    constexpr double coef[4] = {1.0, -3.0, 3.0, -1.0};
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) {
        const double p = 3.0 + j;
        acc += coef[j] * std::exp(std::lgamma(p + 1.0) - std::lgamma(p + 1.0 - gamma)) *
               std::pow(x, p - gamma);
    }
    return acc;
}

double cubic_right_rl(double x, double gamma) {
    return cubic_left_rl(1.0 - x, gamma);  // profile is symmetric about 1/2
}

}  // namespace

Suite operator_accuracy() {
    const auto start = Clock::now();
    Suite suite{"operator accuracy", {}, 0.0};
    const std::vector<std::size_t> ms = {32, 64, 128};
    const std::vector<double> gammas = {0.3, 0.5, 0.8, 1.2, 1.5, 1.8, 2.0};

    for (double gamma : gammas) {
        for (int side = 0; side < 2; ++side) {
            std::vector<double> errors;
            for (std::size_t m : ms) {
                const double h = 1.0 / static_cast<double>(m);
                std::vector<double> values(m + 1);
                for (std::size_t i = 0; i <= m; ++i) values[i] = cubic_profile(i * h);
                double worst = 0.0;
                for (std::size_t i = 1; i < m; ++i) {
                    const double x = i * h;
                    if (x < 0.25 || x > 0.75) continue;
                    const double approx = side == 0
                                              ? left_rl_derivative(values, gamma, h, i)
                                              : right_rl_derivative(values, gamma, h, i);
                    const double truth =
                        side == 0 ? cubic_left_rl(x, gamma) : cubic_right_rl(x, gamma);
                    worst = std::max(worst, std::abs(approx - truth));
                }
                errors.push_back(worst);
            }
            double margin = 1.0;
            for (std::size_t k = 1; k < errors.size(); ++k) {
                const double order = std::log2(errors[k - 1] / errors[k]);
                margin = std::min(margin, std::min(order - 1.8, 2.2 - order));
            }
            std::ostringstream name;
            name << (side == 0 ? "left" : "right") << " operator order at gamma = " << gamma;
            suite.checks.push_back(margin_check(name.str(), margin));
        }
    }
    suite.wall_seconds = seconds_since(start);
    return suite;
}

Suite matrix_structure() {
    const auto start = Clock::now();
    Suite suite{"matrix structure", {}, 0.0};
    const std::vector<double> alphas = {0.1, 0.5, 0.9};
    const std::vector<double> betas = {1.2, 1.5, 1.8, 2.0};
    const std::vector<std::size_t> ms = {8, 32};

    double dominance = 1e300;
    double min_eigenvalue = 1e300;
    double resolvent_slack = 1e300;
    double iteration_slack = 1e300;

    for (double alpha : alphas) {
        for (double beta : betas) {
            for (std::size_t m : ms) {
                const Grid grid(1.0, m, 1.0, m);  // tau = h
                const RieszSystem sys(grid, FractionalOrder::advection(alpha),
                                      FractionalOrder::dispersion(beta), 1.0, 1.0);
                const DenseMatrix d = sys.dense();
                const std::size_t n = d.size();

                for (std::size_t i = 0; i < n; ++i) {
                    double off = 0.0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != i) off += std::abs(d(i, j));
                    dominance = std::min(dominance, std::abs(d(i, i)) - off);
                }

                const std::vector<double> eig = symmetric_eigenvalues(d);
                min_eigenvalue = std::min(min_eigenvalue, eig.front());
                for (double lambda : eig) {
                    resolvent_slack = std::min(resolvent_slack, 1.0 - 1.0 / (1.0 + lambda));
                    iteration_slack = std::min(
                        iteration_slack, 1.0 - std::abs(1.0 - lambda) / (1.0 + lambda));
                }
            }
        }
    }

    suite.checks.push_back(margin_check(
        "strict diagonal dominance of D over the parameter grid", dominance));
    suite.checks.push_back(margin_check("D positive definite (smallest eigenvalue)",
                                        min_eigenvalue));
    suite.checks.push_back(
        margin_check("2-norm of (I+D)^-1 bounded by one", resolvent_slack));
    suite.checks.push_back(
        margin_check("2-norm of (I+D)^-1 (I-D) bounded by one", iteration_slack));
    suite.wall_seconds = seconds_since(start);
    return suite;
}

Suite stability() {
    const auto start = Clock::now();
    Suite suite{"stability", {}, 0.0};

    auto profile = [](double x) { return x * x * (1.0 - x) * (1.0 - x); };
    const SolverChoice choice;
    const std::size_t m = 32;
    const double h = 1.0 / static_cast<double>(m);

    for (double ratio : {0.1, 1.0, 10.0}) {
        const std::size_t steps = 200;
        const double tau = ratio * h;
        const Grid grid(1.0, m, tau * static_cast<double>(steps), steps);
        const ProblemSpec problem{"homogeneous",
                                  1.0,
                                  FractionalOrder::advection(0.5),
                                  FractionalOrder::dispersion(1.5),
                                  1.0,
                                  1.0,
                                  profile,
                                  zero_source(),
                                  SpaceTimeFunction{}};
        const GridSolution solution = integrate(problem, grid, choice, Keep::AllSteps);

        double slack = 1e300;
        double prev = 0.0;
        for (std::size_t n = 0; n <= steps; ++n) {
            double norm = 0.0;
            for (double v : solution.row(n)) norm += v * v;
            norm = std::sqrt(norm);
            if (n > 0) slack = std::min(slack, prev * (1.0 + 1e-13) - norm);
            prev = norm;
        }
        std::ostringstream name;
        name << "norm non-increasing over 200 steps at tau/h = " << ratio;
        suite.checks.push_back(margin_check(name.str(), slack));
    }

    // Perturbing the initial data must not amplify: the difference field
    // evolves by powers of (I+D)^-1 (I-D), whose 2-norm is at most one.
    {
        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        const std::size_t steps = 50;
        const Grid grid(1.0, m, static_cast<double>(steps) * h, steps);
        std::vector<double> delta(grid.interior_count());
        for (auto& d : delta) d = 1e-3 * unit(rng);

        auto perturbed = [&](double x) {
            const double idx = x / h;
            const auto i = static_cast<std::size_t>(std::llround(idx));
            const double bump = (i >= 1 && i < m) ? delta[i - 1] : 0.0;
            return profile(x) + bump;
        };
        const ProblemSpec base{"homogeneous", 1.0, FractionalOrder::advection(0.5),
                               FractionalOrder::dispersion(1.5), 1.0, 1.0,
                               profile, zero_source(), SpaceTimeFunction{}};
        const ProblemSpec bumped{"homogeneous-perturbed", 1.0,
                                 FractionalOrder::advection(0.5),
                                 FractionalOrder::dispersion(1.5), 1.0, 1.0,
                                 perturbed, zero_source(), SpaceTimeFunction{}};

        const auto u0 = integrate(base, grid, choice, Keep::FinalOnly);
        const auto u1 = integrate(bumped, grid, choice, Keep::FinalOnly);
        double initial = 0.0, final_diff = 0.0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            initial += delta[i] * delta[i];
            const double d = u1.final_row()[i] - u0.final_row()[i];
            final_diff += d * d;
        }
        suite.checks.push_back(margin_check(
            "perturbation not amplified at the final time",
            std::sqrt(initial) * (1.0 + 1e-12) - std::sqrt(final_diff)));
    }

    suite.wall_seconds = seconds_since(start);
    return suite;
}

std::vector<Suite> run_all() {
    return {coefficient_laws(), operator_accuracy(), matrix_structure(), stability()};
}

}  // namespace rsfade::verify
