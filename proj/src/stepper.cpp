#include "rsfade/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rsfade {

GridSolution::GridSolution(Grid grid, Keep keep) : grid_(grid), keep_(keep) {}

bool GridSolution::has_row(std::size_t n) const {
    return std::find(kept_steps_.begin(), kept_steps_.end(), n) != kept_steps_.end();
}

std::span<const double> GridSolution::row(std::size_t n) const {
    const auto it = std::find(kept_steps_.begin(), kept_steps_.end(), n);
    if (it == kept_steps_.end()) {
        std::ostringstream msg;
        msg << "solution row for step " << n << " was not retained";
        throw std::out_of_range(msg.str());
    }
    return rows_[static_cast<std::size_t>(it - kept_steps_.begin())];
}

void GridSolution::set_row(std::size_t n, std::vector<double> values) {
    if (values.size() != grid_.interior_count())
        throw std::invalid_argument("solution row has wrong length");
    const auto it = std::find(kept_steps_.begin(), kept_steps_.end(), n);
    if (it != kept_steps_.end()) {
        rows_[static_cast<std::size_t>(it - kept_steps_.begin())] = std::move(values);
    } else {
        kept_steps_.push_back(n);
        rows_.push_back(std::move(values));
    }
}

std::vector<double> cn_step(const CnSolver& solver, std::span<const double> u_prev,
                            std::span<const double> f_prev,
                            std::span<const double> f_curr, double tau) {
    const RieszSystem& sys = solver.system();
    const std::size_t n = sys.size();
    if (u_prev.size() != n || f_prev.size() != n || f_curr.size() != n)
        throw std::invalid_argument("cn_step: dimension mismatch");

    std::vector<double> rhs(n);
    sys.apply(u_prev, rhs);  // rhs = D u_prev
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = u_prev[i] - rhs[i] + 0.5 * tau * (f_prev[i] + f_curr[i]);
    }
    return solver.solve(rhs);
}

std::vector<double> cn_step(const RieszSystem& sys, std::span<const double> u_prev,
                            std::span<const double> f_prev,
                            std::span<const double> f_curr, double tau,
                            const SolverChoice& choice) {
    return cn_step(CnSolver(sys, choice), u_prev, f_prev, f_curr, tau);
}

GridSolution integrate(const ProblemSpec& problem, const Grid& grid,
                       const SolverChoice& choice, Keep keep) {
    if (std::abs(problem.length - grid.length) > 1e-12 * std::max(1.0, problem.length)) {
        throw std::invalid_argument("integrate: problem and grid disagree on the domain length");
    }

    const std::size_t interior = grid.interior_count();
    const double tau = grid.tau();
    const RieszSystem sys =
        assemble_system(grid, problem.alpha, problem.beta, problem.k_alpha, problem.k_beta);
    const CnSolver solver(sys, choice);

    auto check_finite = [&](std::span<const double> u, std::size_t step) {
        for (double v : u) {
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "integrate: non-finite value at step " << step << " (t = "
                    << static_cast<double>(step) * tau << ")";
                throw std::runtime_error(msg.str());
            }
        }
    };

    std::vector<double> u(interior);
    for (std::size_t i = 0; i < interior; ++i) u[i] = problem.initial(grid.x(i + 1));
    check_finite(u, 0);

    GridSolution solution(grid, keep);
    solution.set_row(0, u);

    std::vector<double> f_prev(interior), f_curr(interior);
    for (std::size_t i = 0; i < interior; ++i) f_prev[i] = problem.source(grid.x(i + 1), 0.0);

    for (std::size_t n = 1; n <= grid.steps; ++n) {
        const double t_n = grid.t(n);
        for (std::size_t i = 0; i < interior; ++i) f_curr[i] = problem.source(grid.x(i + 1), t_n);
        u = cn_step(solver, u, f_prev, f_curr, tau);
        check_finite(u, n);
        if (keep == Keep::AllSteps || n == grid.steps) solution.set_row(n, u);
        std::swap(f_prev, f_curr);
    }
    return solution;
}

}  // namespace rsfade
