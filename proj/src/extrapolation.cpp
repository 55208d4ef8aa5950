#include "rsfade/extrapolation.hpp"

#include <stdexcept>

namespace rsfade {

std::vector<double> restrict_to_coarse(std::span<const double> fine_interior,
                                       std::size_t factor) {
    if (factor == 0) throw std::invalid_argument("restrict_to_coarse: factor must be >= 1");
    const std::size_t fine_m = fine_interior.size() + 1;
    if (fine_m % factor != 0 || fine_m / factor < 2) {
        throw std::invalid_argument(
            "restrict_to_coarse: fine grid is not an even refinement of the coarse grid");
    }
    const std::size_t coarse_m = fine_m / factor;
    std::vector<double> out(coarse_m - 1);
    for (std::size_t j = 1; j < coarse_m; ++j) {
        out[j - 1] = fine_interior[j * factor - 1];
    }
    return out;
}

namespace {

std::vector<double> affine_combine(std::span<const double> coarse,
                                   std::span<const double> mid, double mid_weight,
                                   double denom) {
    if (coarse.size() != mid.size())
        throw std::invalid_argument("richardson combination: length mismatch");
    std::vector<double> out(coarse.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (mid_weight * mid[i] - coarse[i]) / denom;
    }
    return out;
}

}  // namespace

std::vector<double> richardson_order3(std::span<const double> coarse,
                                      std::span<const double> mid) {
    return affine_combine(coarse, mid, 4.0, 3.0);
}

std::vector<double> richardson_order4(std::span<const double> coarse3,
                                      std::span<const double> mid3) {
    return affine_combine(coarse3, mid3, 8.0, 7.0);
}

std::vector<double> rem_solve(const ProblemSpec& problem, const Grid& coarse_grid,
                              const SolverChoice& choice) {
    const Grid mid_grid(coarse_grid.length, 2 * coarse_grid.subintervals,
                        coarse_grid.final_time, 2 * coarse_grid.steps);
    const Grid fine_grid(coarse_grid.length, 4 * coarse_grid.subintervals,
                         coarse_grid.final_time, 4 * coarse_grid.steps);

    const GridSolution coarse = integrate(problem, coarse_grid, choice, Keep::FinalOnly);
    const GridSolution mid = integrate(problem, mid_grid, choice, Keep::FinalOnly);
    const GridSolution fine = integrate(problem, fine_grid, choice, Keep::FinalOnly);

    // First stage on the coarse nodes and on the mid nodes, second stage
    // on the coarse nodes.
    const std::vector<double> stage1_coarse =
        richardson_order3(coarse.final_row(), restrict_to_coarse(mid.final_row(), 2));
    const std::vector<double> stage1_mid =
        richardson_order3(mid.final_row(), restrict_to_coarse(fine.final_row(), 2));
    return richardson_order4(stage1_coarse, restrict_to_coarse(stage1_mid, 2));
}

}  // namespace rsfade
