#include "rsfade/discretization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rsfade {

Grid::Grid(double length_, std::size_t subintervals_, double final_time_, std::size_t steps_)
    : length(length_), subintervals(subintervals_), final_time(final_time_), steps(steps_) {
    if (!(length > 0.0)) throw std::domain_error("grid: domain length must be positive");
    if (subintervals < 3) throw std::domain_error("grid: need at least 3 space subintervals");
    if (!(final_time > 0.0)) throw std::domain_error("grid: final time must be positive");
    if (steps < 1) throw std::domain_error("grid: need at least one time step");
}

double riesz_scale(double gamma) {
    const double c = std::cos(std::numbers::pi * gamma / 2.0);
    if (std::abs(c) < 1e-12) {
        std::ostringstream msg;
        msg << "riesz_scale undefined at gamma = " << gamma << " (cos(pi*gamma/2) = 0)";
        throw std::domain_error(msg.str());
    }
    return 1.0 / (2.0 * c);
}

namespace {

void check_interior_index(std::size_t i, std::size_t m) {
    if (i < 1 || i > m - 1) {
        std::ostringstream msg;
        msg << "node index " << i << " outside the interior range [1, " << m - 1 << "]";
        throw std::out_of_range(msg.str());
    }
}

}  // namespace

double left_rl_derivative(std::span<const double> values, double gamma, double h,
                          std::size_t i) {
    const std::size_t m = values.size() - 1;
    check_interior_index(i, m);
    const std::vector<double> w = wsgd_weights(gamma, i + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k <= i + 1; ++k) {
        acc += w[k] * values[i - k + 1];
    }
    return acc / std::pow(h, gamma);
}

double right_rl_derivative(std::span<const double> values, double gamma, double h,
                           std::size_t i) {
    const std::size_t m = values.size() - 1;
    check_interior_index(i, m);
    const std::vector<double> w = wsgd_weights(gamma, m - i + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k <= m - i + 1; ++k) {
        acc += w[k] * values[i + k - 1];
    }
    return acc / std::pow(h, gamma);
}

std::vector<double> riesz_toeplitz_column(double gamma, std::size_t m) {
    if (m < 3) throw std::domain_error("riesz_toeplitz_column: need m >= 3");
    const std::vector<double> w = wsgd_weights(gamma, m);
    std::vector<double> col(m - 1);
    col[0] = 2.0 * w[1];
    col[1] = w[0] + w[2];
    for (std::size_t k = 2; k < m - 1; ++k) col[k] = w[k + 1];
    return col;
}

RieszSystem::RieszSystem(const Grid& grid, FractionalOrder alpha, FractionalOrder beta,
                         double k_alpha, double k_beta)
    : alpha_(alpha.value()), beta_(beta.value()), k_alpha_(k_alpha), k_beta_(k_beta) {
    if (alpha.regime() != OrderRegime::Advection)
        throw std::domain_error("assemble_system: alpha must be an advection order");
    if (beta.regime() != OrderRegime::Dispersion)
        throw std::domain_error("assemble_system: beta must be a dispersion order");
    if (!(k_alpha >= 0.0))
        throw std::domain_error("assemble_system: K_alpha must be non-negative");
    if (!(k_beta > 0.0))
        throw std::domain_error("assemble_system: K_beta must be positive");

    const double h = grid.h();
    const double tau = grid.tau();
    mu_alpha_ = tau * k_alpha_ * riesz_scale(alpha_) / (2.0 * std::pow(h, alpha_));
    mu_beta_ = tau * k_beta_ * riesz_scale(beta_) / (2.0 * std::pow(h, beta_));

    const std::vector<double> col_a = riesz_toeplitz_column(alpha_, grid.subintervals);
    const std::vector<double> col_b = riesz_toeplitz_column(beta_, grid.subintervals);
    d_col_.resize(grid.interior_count());
    for (std::size_t k = 0; k < d_col_.size(); ++k) {
        d_col_[k] = mu_alpha_ * col_a[k] + mu_beta_ * col_b[k];
    }
}

void RieszSystem::apply(std::span<const double> v, std::span<double> out) const {
    const std::size_t n = d_col_.size();
    if (v.size() != n || out.size() != n)
        throw std::invalid_argument("apply_D: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += d_col_[i >= j ? i - j : j - i] * v[j];
        }
        out[i] = acc;
    }
}

std::vector<double> RieszSystem::apply(std::span<const double> v) const {
    std::vector<double> out(v.size());
    apply(v, out);
    return out;
}

DenseMatrix RieszSystem::dense() const {
    return DenseMatrix::symmetric_toeplitz(d_col_);
}

RieszSystem assemble_system(const Grid& grid, FractionalOrder alpha, FractionalOrder beta,
                            double k_alpha, double k_beta) {
    return RieszSystem(grid, alpha, beta, k_alpha, k_beta);
}

}  // namespace rsfade
