#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsfade/stepper.hpp"

namespace rsfade {

/// Subsamples interior values from an evenly refined grid back to the
/// coarse grid: coarse node j maps to fine node j*factor. No
/// interpolation is ever performed; only coincident nodes are used.
std::vector<double> restrict_to_coarse(std::span<const double> fine_interior,
                                       std::size_t factor);

/// Richardson combination (4 f_{h/2} - f_h) / 3, eliminating the leading
/// h^2 error term. Both vectors live on the coarse grid.
std::vector<double> richardson_order3(std::span<const double> coarse,
                                      std::span<const double> mid);

/// Second Richardson stage (8 f_{h/2} - f_h) / 7, eliminating the h^3 term.
std::vector<double> richardson_order4(std::span<const double> coarse3,
                                      std::span<const double> mid3);

/// Richardson-extrapolated solve: integrates on (h, tau), (h/2, tau/2)
/// and (h/4, tau/4), combines the restricted solutions with the two
/// extrapolation stages, and returns the O(tau^4 + h^4) field at t = T on
/// the coarse grid's interior nodes.
std::vector<double> rem_solve(const ProblemSpec& problem, const Grid& coarse_grid,
                              const SolverChoice& choice);

}  // namespace rsfade
