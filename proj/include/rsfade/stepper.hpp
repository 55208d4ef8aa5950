#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsfade/discretization.hpp"
#include "rsfade/linsolve.hpp"
#include "rsfade/problems.hpp"

namespace rsfade {

enum class Keep { FinalOnly, AllSteps };

/// Discrete solution field on a space-time grid. Rows hold the interior
/// values u_1..u_{m-1} at a time level; the boundary values are zero by
/// construction. With Keep::FinalOnly only rows 0 and N are retained.
class GridSolution {
public:
    GridSolution(Grid grid, Keep keep);

    const Grid& grid() const { return grid_; }
    Keep keep() const { return keep_; }

    bool has_row(std::size_t n) const;
    std::span<const double> row(std::size_t n) const;  // throws if not retained
    std::span<const double> initial_row() const { return row(0); }
    std::span<const double> final_row() const { return row(grid_.steps); }

    void set_row(std::size_t n, std::vector<double> values);

private:
    Grid grid_;
    Keep keep_;
    std::vector<std::size_t> kept_steps_;
    std::vector<std::vector<double>> rows_;
};

/// One Crank-Nicolson update: solves
///   (I + D) u_curr = (I - D) u_prev + (tau/2)(f_prev + f_curr)
/// reusing the solver's factorization/setup.
std::vector<double> cn_step(const CnSolver& solver, std::span<const double> u_prev,
                            std::span<const double> f_prev,
                            std::span<const double> f_curr, double tau);

/// Convenience overload that builds the solver on the fly.
std::vector<double> cn_step(const RieszSystem& sys, std::span<const double> u_prev,
                            std::span<const double> f_prev,
                            std::span<const double> f_curr, double tau,
                            const SolverChoice& choice);

/// Marches the scheme from the initial condition to T. The implicit
/// operator is set up once and reused for all N steps. Throws if any step
/// produces a non-finite value, naming the step index.
GridSolution integrate(const ProblemSpec& problem, const Grid& grid,
                       const SolverChoice& choice, Keep keep);

}  // namespace rsfade
