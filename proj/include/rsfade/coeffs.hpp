#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rsfade {

/// Which range of fractional orders a coefficient sequence belongs to.
/// Advection orders live in (0,1); dispersion orders in (1,2].
enum class OrderRegime { Advection, Dispersion };

/// A fractional differentiation order validated against its regime.
class FractionalOrder {
public:
    FractionalOrder(double gamma, OrderRegime regime);

    static FractionalOrder advection(double gamma) {
        return {gamma, OrderRegime::Advection};
    }
    static FractionalOrder dispersion(double gamma) {
        return {gamma, OrderRegime::Dispersion};
    }

    double value() const { return gamma_; }
    OrderRegime regime() const { return regime_; }

private:
    double gamma_;
    OrderRegime regime_;
};

/// Grunwald-Letnikov coefficients g_0..g_count for order gamma in (0,2],
/// generated by the multiplicative recursion
///   g_0 = 1,  g_k = (1 - (gamma+1)/k) g_{k-1}.
/// Throws std::domain_error for gamma outside (0,2].
std::vector<double> grunwald_coeffs(double gamma, std::size_t count);

/// Weighted-shifted Grunwald weights w_0..w_count for the (p,q)=(1,0) pair:
///   w_0 = gamma/2,  w_k = (gamma/2) g_k + ((2-gamma)/2) g_{k-1}.
std::vector<double> wsgd_weights(double gamma, std::size_t count);

/// Both coefficient sequences for one order, generated together.
struct GrunwaldSeq {
    double gamma = 0.0;
    std::vector<double> g;
    std::vector<double> w;

    static GrunwaldSeq make(double gamma, std::size_t n);

    std::size_t length() const { return g.size(); }  // n + 1
};

enum class CheckOutcome {
    Pass,
    PassAtBoundary,  // strict inequality degenerated to equality (gamma = 2)
    Fail,
};

struct PropertyCheck {
    std::string name;
    CheckOutcome outcome = CheckOutcome::Fail;
    double margin = 0.0;  // worst slack observed; sign convention: >= 0 means satisfied

    bool ok() const { return outcome != CheckOutcome::Fail; }
};

struct LemmaReport {
    double gamma = 0.0;
    std::size_t n = 0;
    std::vector<PropertyCheck> checks;

    bool all_passed() const;
    const PropertyCheck* find(const std::string& name) const;
};

/// Checks every finite-length consequence of the coefficient sign and
/// monotonicity laws that applies to seq's regime: signs of the leading
/// terms, tail monotonicity, partial-sum signs, and decay of the partial
/// sums toward zero. Requires seq.length() >= 4.
LemmaReport verify_coefficient_lemmas(const GrunwaldSeq& seq);

}  // namespace rsfade
