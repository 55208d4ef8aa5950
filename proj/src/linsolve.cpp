#include "rsfade/linsolve.hpp"

#include <cmath>
#include <sstream>

namespace rsfade {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

CnSolver::CnSolver(const RieszSystem& sys, SolverChoice choice)
    : sys_(sys), choice_(choice) {
    if (!(choice_.cg_tol > 0.0)) throw std::domain_error("cg_tol must be positive");
    if (choice_.cg_max_iter == 0) choice_.cg_max_iter = 10 * sys_.size();
    if (choice_.kind == SolverKind::DenseDirect) {
        factor_.emplace(sys_.dense().shifted_by_identity(1.0));
    }
}

std::vector<double> CnSolver::solve(std::span<const double> b) const {
    if (b.size() != sys_.size())
        throw std::invalid_argument("solve_spd: right-hand side has wrong length");
    if (choice_.kind == SolverKind::DenseDirect) return factor_->solve(b);
    return solve_cg(b);
}

std::vector<double> CnSolver::solve_cg(std::span<const double> b) const {
    const std::size_t n = sys_.size();
    const double b_norm = norm2(b);
    std::vector<double> x(n, 0.0);
    if (b_norm == 0.0) return x;

    // Diagonal of I + D is constant (Toeplitz), so the Jacobi
    // preconditioner is a scalar scaling.
    const double inv_diag =
        choice_.cg_jacobi ? 1.0 / (1.0 + sys_.first_column()[0]) : 1.0;

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z(n), p(n), ap(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag * r[i];
    p = z;
    double rz = dot(r, z);

    const double target = choice_.cg_tol * b_norm;
    for (std::size_t it = 0; it < choice_.cg_max_iter; ++it) {
        sys_.apply(p, ap);
        for (std::size_t i = 0; i < n; ++i) ap[i] += p[i];  // (I + D) p
        const double denom = dot(p, ap);
        if (!(denom > 0.0)) {
            throw CgError("conjugate gradients: curvature not positive (matrix not SPD?)",
                          norm2(r), it);
        }
        const double alpha = rz / denom;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if (norm2(r) <= target) return x;
        for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    const double res = norm2(r);
    std::ostringstream msg;
    msg << "conjugate gradients: no convergence within " << choice_.cg_max_iter
        << " iterations (residual " << res << ", target " << target << ")";
    throw CgError(msg.str(), res, choice_.cg_max_iter);
}

std::vector<double> solve_spd(const RieszSystem& sys, std::span<const double> b,
                              const SolverChoice& choice) {
    return CnSolver(sys, choice).solve(b);
}

}  // namespace rsfade
