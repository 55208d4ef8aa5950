#pragma once

#include <string>
#include <vector>

#include "rsfade/coeffs.hpp"

namespace rsfade::verify {

struct Suite {
    std::string name;
    std::vector<PropertyCheck> checks;
    double wall_seconds = 0.0;

    bool all_passed() const;
};

/// Coefficient sign/monotonicity/partial-sum laws over the order grid
/// {0.1..0.9, 1.1..2.0}, sequences of length 257.
Suite coefficient_laws();

/// Observed second-order accuracy of the left/right fractional-derivative
/// operators against the analytic monomial rule, measured on the interior
/// window [L/4, 3L/4] over h = 1/32, 1/64, 1/128.
Suite operator_accuracy();

/// Strict diagonal dominance, positive definiteness and the resolvent
/// norm bounds of the system matrix over a parameter grid.
Suite matrix_structure();

/// Unconditional stability: non-increasing solution norms for the
/// homogeneous problem across tau/h ratios, plus contraction of an
/// initial perturbation.
Suite stability();

std::vector<Suite> run_all();

}  // namespace rsfade::verify
