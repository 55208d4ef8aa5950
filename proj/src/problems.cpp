#include "rsfade/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsfade/discretization.hpp"

namespace rsfade {

namespace {

constexpr double kBoundaryTol = 1e-12;

// Gamma(a) / Gamma(b) for positive arguments, via log-gamma to keep the
// large factorial-like numerators in range.
double gamma_ratio(double a, double b) {
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

double l_pair(double x, double p) {
    return std::pow(x, p) + std::pow(1.0 - x, p);
}

// Monomial coefficients of x^6 (1-x)^6 = sum_j c_j x^{6+j}.
constexpr std::array<double, 7> kSexticCoeffs = {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0};

// Riesz derivative of order gamma of x^6(1-x)^6, evaluated via the
// analytic rule D^gamma x^p = Gamma(p+1)/Gamma(p+1-gamma) x^{p-gamma}
// applied termwise; the right-sided part mirrors to (1-x) powers because
// the profile is symmetric about x = 1/2.
SpaceFunction riesz_of_sextic(double gamma) {
    const double c_gamma = riesz_scale(gamma);
    std::array<double, 7> coef{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double p = 6.0 + static_cast<double>(j);
        coef[j] = kSexticCoeffs[j] * gamma_ratio(p + 1.0, p + 1.0 - gamma);
    }
    return [c_gamma, coef, gamma](double x) {
        double acc = 0.0;
        for (std::size_t j = 0; j < 7; ++j) {
            const double p = 6.0 + static_cast<double>(j) - gamma;
            acc += coef[j] * (std::pow(x, p) + std::pow(1.0 - x, p));
        }
        return -c_gamma * acc;
    };
}

}  // namespace

ProblemSpec::ProblemSpec(std::string name_, double length_, FractionalOrder alpha_,
                         FractionalOrder beta_, double k_alpha_, double k_beta_,
                         SpaceFunction initial_, SpaceTimeFunction source_,
                         SpaceTimeFunction exact_)
    : name(std::move(name_)),
      length(length_),
      alpha(alpha_),
      beta(beta_),
      k_alpha(k_alpha_),
      k_beta(k_beta_),
      initial(std::move(initial_)),
      source(std::move(source_)),
      exact(std::move(exact_)) {
    if (!(length > 0.0)) throw std::domain_error("problem: domain length must be positive");
    if (!(k_alpha >= 0.0)) throw std::domain_error("problem: K_alpha must be non-negative");
    if (!(k_beta > 0.0)) throw std::domain_error("problem: K_beta must be positive");
    if (!initial) throw std::invalid_argument("problem: initial condition is required");
    if (!source) throw std::invalid_argument("problem: source must be set (use zero_source())");
    if (std::abs(initial(0.0)) > kBoundaryTol || std::abs(initial(length)) > kBoundaryTol) {
        throw std::invalid_argument(
            "problem: initial condition incompatible with zero Dirichlet boundaries");
    }
}

SpaceTimeFunction zero_source() {
    return [](double, double) { return 0.0; };
}

ProblemSpec example1(double beta) {
    const FractionalOrder beta_order = FractionalOrder::dispersion(beta);
    const double c_beta = riesz_scale(beta);
    const double g4 = 24.0 / std::tgamma(5.0 - beta);
    const double g3 = 12.0 / std::tgamma(4.0 - beta);
    const double g2 = 2.0 / std::tgamma(3.0 - beta);

    auto profile = [](double x) { return x * x * (1.0 - x) * (1.0 - x); };
    auto source = [=](double x, double t) {
        const double et = std::exp(-t);
        return et * (-profile(x) + c_beta * (g4 * l_pair(x, 4.0 - beta) -
                                             g3 * l_pair(x, 3.0 - beta) +
                                             g2 * l_pair(x, 2.0 - beta)));
    };
    auto exact = [=](double x, double t) { return profile(x) * std::exp(-t); };

    // Alpha is inert here (K_alpha = 0); any admissible value works.
    return {"example1", 1.0,    FractionalOrder::advection(0.5),
            beta_order, 0.0,    1.0,
            profile,    source, exact};
}

ProblemSpec example2(double alpha, double beta) {
    const FractionalOrder alpha_order = FractionalOrder::advection(alpha);
    const FractionalOrder beta_order = FractionalOrder::dispersion(beta);
    const double k_alpha = 2.0;
    const double k_beta = 2.0;

    auto profile = [](double x) {
        const double y = x * (1.0 - x);
        return y * y * y * y * y * y;
    };
    const SpaceFunction riesz_a = riesz_of_sextic(alpha);
    const SpaceFunction riesz_b = riesz_of_sextic(beta);

    // f = u_t - K_alpha Riesz_alpha(u) - K_beta Riesz_beta(u) for
    // u = t^beta e^{alpha t} x^6 (1-x)^6; beta > 1 keeps t^{beta-1}
    // well defined down to t = 0.
    auto source = [=](double x, double t) {
        const double eat = std::exp(alpha * t);
        const double u_t = std::pow(t, beta - 1.0) * eat * (beta + alpha * t) * profile(x);
        const double time_factor = std::pow(t, beta) * eat;
        return u_t - time_factor * (k_alpha * riesz_a(x) + k_beta * riesz_b(x));
    };
    auto exact = [=](double x, double t) {
        return std::pow(t, beta) * std::exp(alpha * t) * profile(x);
    };

    return {"example2",  1.0,
            alpha_order, beta_order,
            k_alpha,     k_beta,
            [](double) { return 0.0; },
            source,      exact};
}

double example3_exact(double x, double t, double alpha, double beta, double k_alpha,
                      double k_beta, std::size_t terms) {
    double acc = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double dn = static_cast<double>(n);
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        const double coeff = (8.0 * sign - 4.0) / (dn * dn * dn);
        const double decay =
            std::exp(-(k_alpha * std::pow(dn, alpha) + k_beta * std::pow(dn, beta)) * t);
        acc += coeff * std::sin(dn * x) * decay;
    }
    return acc;
}

double example3_exact_adaptive(double x, double t, double alpha, double beta,
                               double k_alpha, double k_beta) {
    if (t == 0.0) {
        return x * x * (std::numbers::pi - x);  // series limit at t = 0
    }
    constexpr double kTermTol = 1e-14;
    constexpr std::size_t kMaxTerms = 1'000'000;
    double acc = 0.0;
    for (std::size_t n = 1; n <= kMaxTerms; ++n) {
        const double dn = static_cast<double>(n);
        // |coefficient| <= 12/n^3 and the alpha part of the decay only helps.
        const double bound =
            12.0 / (dn * dn * dn) * std::exp(-k_beta * std::pow(dn, beta) * t);
        if (bound < kTermTol) break;
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        const double coeff = (8.0 * sign - 4.0) / (dn * dn * dn);
        const double decay =
            std::exp(-(k_alpha * std::pow(dn, alpha) + k_beta * std::pow(dn, beta)) * t);
        acc += coeff * std::sin(dn * x) * decay;
    }
    return acc;
}

ProblemSpec example3(double alpha, double beta) {
    const FractionalOrder alpha_order = FractionalOrder::advection(alpha);
    const FractionalOrder beta_order = FractionalOrder::dispersion(beta);
    const double k = 0.15;

    auto profile = [](double x) { return x * x * (std::numbers::pi - x); };
    auto exact = [=](double x, double t) {
        return example3_exact_adaptive(x, t, alpha, beta, k, k);
    };

    return {"example3",  std::numbers::pi,
            alpha_order, beta_order,
            k,           k,
            profile,     zero_source(),
            exact};
}

}  // namespace rsfade
