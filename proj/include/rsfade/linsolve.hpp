#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsfade/dense.hpp"
#include "rsfade/discretization.hpp"

namespace rsfade {

enum class SolverKind { DenseDirect, ConjugateGradient };

struct SolverChoice {
    SolverKind kind = SolverKind::DenseDirect;
    double cg_tol = 1e-12;
    std::size_t cg_max_iter = 0;  // 0: defaults to 10*(m-1)
    bool cg_jacobi = false;       // diagonal preconditioning
};

/// Conjugate gradients failed to reach the residual contract; usually a
/// violated SPD assumption or a tolerance below what the conditioning allows.
class CgError : public std::runtime_error {
public:
    CgError(const std::string& what, double residual_, std::size_t iterations_)
        : std::runtime_error(what), residual(residual_), iterations(iterations_) {}

    double residual;
    std::size_t iterations;
};

/// Solver for (I + D) x = b. D is constant in time, so the setup
/// (Cholesky factorization for the direct path) happens once here and is
/// reused for every time step. Immutable after construction; solve() may
/// be called concurrently.
class CnSolver {
public:
    CnSolver(const RieszSystem& sys, SolverChoice choice);

    std::vector<double> solve(std::span<const double> b) const;
    const RieszSystem& system() const { return sys_; }
    const SolverChoice& choice() const { return choice_; }

private:
    std::vector<double> solve_cg(std::span<const double> b) const;

    RieszSystem sys_;
    SolverChoice choice_;
    std::optional<CholeskyFactor> factor_;  // DenseDirect only
};

/// One-shot convenience wrapper around CnSolver.
std::vector<double> solve_spd(const RieszSystem& sys, std::span<const double> b,
                              const SolverChoice& choice);

}  // namespace rsfade
