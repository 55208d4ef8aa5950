#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "rsfade/coeffs.hpp"

namespace rsfade {

using SpaceFunction = std::function<double(double x)>;
using SpaceTimeFunction = std::function<double(double x, double t)>;

/// One instance of the fractional advection-dispersion problem
///   u_t = K_alpha d^alpha u / d|x|^alpha + K_beta d^beta u / d|x|^beta + f
/// on (0, L) with zero Dirichlet boundaries and u(x,0) = initial(x).
/// `exact` may be empty when no closed-form solution is known. The
/// function fields must be pure; ProblemSpec is immutable by convention.
struct ProblemSpec {
    ProblemSpec(std::string name, double length, FractionalOrder alpha,
                FractionalOrder beta, double k_alpha, double k_beta,
                SpaceFunction initial, SpaceTimeFunction source,
                SpaceTimeFunction exact);

    std::string name;
    double length;
    FractionalOrder alpha;  // ignored by the operator when k_alpha == 0
    FractionalOrder beta;
    double k_alpha;
    double k_beta;
    SpaceFunction initial;
    SpaceTimeFunction source;
    SpaceTimeFunction exact;

    bool has_exact() const { return static_cast<bool>(exact); }
};

SpaceTimeFunction zero_source();

/// Fractional diffusion benchmark (no advection): L = 1, K_beta = 1,
/// initial profile x^2(1-x)^2, manufactured source chosen so that the
/// exact solution is u(x,t) = x^2 (1-x)^2 e^{-t}.
ProblemSpec example1(double beta);

/// Advection-dispersion benchmark: L = 1, K_alpha = K_beta = 2, zero
/// initial data, manufactured source for the exact solution
/// u(x,t) = t^beta e^{alpha t} x^6 (1-x)^6. The source is derived
/// mechanically from the analytic fractional derivative of the monomial
/// expansion of x^6(1-x)^6.
ProblemSpec example2(double alpha, double beta);

/// Homogeneous benchmark on (0, pi): K_alpha = K_beta = 0.15, initial
/// profile x^2(pi - x), exact solution given by a sine series with
/// fractional-exponential decay.
ProblemSpec example3(double alpha, double beta);

/// Partial sum of the sine series behind example3, truncated after
/// `terms` terms.
double example3_exact(double x, double t, double alpha, double beta,
                      double k_alpha, double k_beta, std::size_t terms);

/// Series evaluation with adaptive truncation: stops once the remaining
/// term bound drops below 1e-14 (capped at 1e6 terms). At t = 0 the
/// series limit is the initial profile itself, which is returned in
/// closed form.
double example3_exact_adaptive(double x, double t, double alpha, double beta,
                               double k_alpha, double k_beta);

}  // namespace rsfade
