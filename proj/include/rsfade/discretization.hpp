#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsfade/coeffs.hpp"
#include "rsfade/dense.hpp"

namespace rsfade {

/// Uniform space-time grid on [0,L] x [0,T]. Interior unknowns are the
/// nodes x_1..x_{m-1}; the boundary values at x_0 and x_m are pinned to
/// zero by the homogeneous Dirichlet conditions.
struct Grid {
    Grid(double length, std::size_t subintervals, double final_time, std::size_t steps);

    double length;            // L
    std::size_t subintervals; // m >= 3
    double final_time;        // T
    std::size_t steps;        // N >= 1

    double h() const { return length / static_cast<double>(subintervals); }
    double tau() const { return final_time / static_cast<double>(steps); }
    double x(std::size_t i) const { return static_cast<double>(i) * h(); }
    double t(std::size_t n) const { return static_cast<double>(n) * tau(); }
    std::size_t interior_count() const { return subintervals - 1; }
};

/// Riesz scaling factor c_gamma = 1 / (2 cos(pi gamma / 2)). Positive on
/// (0,1), negative on (1,2]; undefined at gamma = 1.
double riesz_scale(double gamma);

/// Second-order approximation of the left Riemann-Liouville derivative of
/// order gamma at node i:  h^{-gamma} * sum_{k=0}^{i+1} w_k v[i-k+1].
/// `values` holds v at x_0..x_m (v(x_0) = 0 is the zero-extension
/// premise behind the accuracy claim); 1 <= i <= m-1.
double left_rl_derivative(std::span<const double> values, double gamma, double h,
                          std::size_t i);

/// Mirror image: h^{-gamma} * sum_{k=0}^{m-i+1} w_k v[i+k-1], with the
/// zero extension anchored at v(x_m) = 0.
double right_rl_derivative(std::span<const double> values, double gamma, double h,
                           std::size_t i);

/// First column of the symmetric Toeplitz matrix W_gamma = A + A^T built
/// from the one-sided WSGD stencil: entry 0 is 2 w_1, entry 1 is
/// w_0 + w_2, entry k is w_{k+1} for k >= 2. Length m-1; requires m >= 3.
std::vector<double> riesz_toeplitz_column(double gamma, std::size_t m);

/// The Crank-Nicolson system matrix
///   D = mu_alpha (A + A^T) + mu_beta (B + B^T),
///   mu_gamma = tau K_gamma c_gamma / (2 h^gamma),
/// stored as its first column (D is symmetric Toeplitz). Immutable after
/// assembly; apply() is reentrant.
class RieszSystem {
public:
    RieszSystem(const Grid& grid, FractionalOrder alpha, FractionalOrder beta,
                double k_alpha, double k_beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double k_alpha() const { return k_alpha_; }
    double k_beta() const { return k_beta_; }
    double mu_alpha() const { return mu_alpha_; }
    double mu_beta() const { return mu_beta_; }
    std::size_t size() const { return d_col_.size(); }
    std::span<const double> first_column() const { return d_col_; }

    /// y = D v via the Toeplitz column; O(m^2) reference path.
    void apply(std::span<const double> v, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> v) const;

    /// Densified D (solver setup and test oracles only).
    DenseMatrix dense() const;

private:
    double alpha_, beta_, k_alpha_, k_beta_, mu_alpha_, mu_beta_;
    std::vector<double> d_col_;
};

RieszSystem assemble_system(const Grid& grid, FractionalOrder alpha, FractionalOrder beta,
                            double k_alpha, double k_beta);

}  // namespace rsfade
