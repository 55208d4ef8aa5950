#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rsfade {

/// Row-major square matrix of doubles. Desk-scale only: this backs the
/// direct solver and the dense verification oracles, not the hot path.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<double> multiply(std::span<const double> v) const;

    /// Builds the symmetric Toeplitz matrix whose first column is `col`.
    static DenseMatrix symmetric_toeplitz(std::span<const double> col);

    /// A + diag(shift).
    DenseMatrix shifted_by_identity(double shift) const;

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// Cholesky factorization A = L L^T of a symmetric positive definite
/// matrix, reusable across many right-hand sides.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const DenseMatrix& a);  // throws if not SPD

    std::vector<double> solve(std::span<const double> b) const;
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<double> l_;  // lower triangle, row-major
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Intended for the verification suites (n <= a few hundred).
std::vector<double> symmetric_eigenvalues(DenseMatrix a);

}  // namespace rsfade
