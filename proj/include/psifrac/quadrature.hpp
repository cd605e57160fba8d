#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "psifrac/grid.hpp"
#include "psifrac/psi_function.hpp"

namespace psifrac {

namespace quad_detail {

/// Product-trapezoidal weights of one row: integrates the piecewise-linear
/// interpolant in psi-coordinates exactly against (psi(t_i) - u)^(mu-1).
/// u holds psi(t_j) for all nodes; writes i+1 weights into row.
void fill_row(std::span<const double> u, std::size_t i, double mu, double* row);

/// Contribution of the first cell to the weight on node 1 in row i
/// (needed to drop the cell next to a singular endpoint).
double first_cell_right_weight(std::span<const double> u, std::size_t i, double mu);

}  // namespace quad_detail

/// Precomputed product-integration weights for the weakly singular
/// convolution  y_i = int_a^{t_i} (psi(t_i)-psi(s))^(mu-1) psi'(s) x(s) ds
/// on a fixed grid. No 1/Gamma factor; callers scale as needed.
///
/// Rows are independent and built in parallel. The table is immutable after
/// construction and safe to share across threads.
class ConvolutionWeights {
public:
    ConvolutionWeights(Grid grid, const PsiFunction& psi, double mu);

    double mu() const { return mu_; }
    const Grid& grid() const { return grid_; }

    /// Weights of row i (j = 0..i).
    std::span<const double> row(std::size_t i) const {
        return {w_.data() + i * (i + 1) / 2, i + 1};
    }

    /// First-cell contribution to node 1's weight in row i.
    double first_cell_right(std::size_t i) const { return c0r_[i]; }

    /// y_i for all i. singular_start drops the cell [t_0,t_1] (used when the
    /// sample at t_0 is not meaningful). Callers that know the endpoint power
    /// split it off analytically first (see frac_integral_order).
    std::vector<double> apply(std::span<const double> x, bool singular_start = false) const;
    double apply_at(std::size_t i, std::span<const double> x, bool singular_start = false) const;

private:
    Grid grid_;
    double mu_;
    std::vector<double> u_;    // psi(t_j)
    std::vector<double> w_;    // triangular, row-major
    std::vector<double> c0r_;  // first-cell right-endpoint contribution per row
};

/// One-off convolution without materializing the table: rows are generated
/// on the fly (O(n) memory, same O(n^2) work, parallel over rows).
std::vector<double> apply_convolution(const Grid& grid, const PsiFunction& psi, double mu,
                                      std::span<const double> x, bool singular_start = false);

}  // namespace psifrac
