#include "rsfade/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsfade {

std::vector<double> DenseMatrix::multiply(std::span<const double> v) const {
    if (v.size() != n_) throw std::invalid_argument("dense matvec: dimension mismatch");
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        const double* row = a_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

DenseMatrix DenseMatrix::symmetric_toeplitz(std::span<const double> col) {
    const std::size_t n = col.size();
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = col[i >= j ? i - j : j - i];
        }
    }
    return a;
}

DenseMatrix DenseMatrix::shifted_by_identity(double shift) const {
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < n_; ++i) out(i, i) += shift;
    return out;
}

CholeskyFactor::CholeskyFactor(const DenseMatrix& a) : n_(a.size()), l_(n_ * n_, 0.0) {
    for (std::size_t j = 0; j < n_; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
        if (!(d > 0.0)) {
            throw std::runtime_error("Cholesky: matrix is not positive definite");
        }
        const double ljj = std::sqrt(d);
        l_[j * n_ + j] = ljj;
        for (std::size_t i = j + 1; i < n_; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l_[i * n_ + k] * l_[j * n_ + k];
            l_[i * n_ + j] = s / ljj;
        }
    }
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
    if (b.size() != n_) throw std::invalid_argument("Cholesky solve: dimension mismatch");
    std::vector<double> x(b.begin(), b.end());
    // forward substitution L y = b
    for (std::size_t i = 0; i < n_; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= l_[i * n_ + k] * x[k];
        x[i] = s / l_[i * n_ + i];
    }
    // back substitution L^T x = y
    for (std::size_t ii = n_; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        double s = x[i];
        for (std::size_t k = i + 1; k < n_; ++k) s -= l_[k * n_ + i] * x[k];
        x[i] = s / l_[i * n_ + i];
    }
    return x;
}

std::vector<double> symmetric_eigenvalues(DenseMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return {};

    auto off_norm = [&a, n]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    const double tol = 1e-14 * std::max(scale, 1.0);

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace rsfade
