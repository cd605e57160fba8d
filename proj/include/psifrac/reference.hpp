#pragma once

#include <span>
#include <vector>

#include "psifrac/grid.hpp"
#include "psifrac/psi_function.hpp"

namespace psifrac::ref {

/// Serial reference kernels. Straight-line single-threaded versions of the
/// hot loops, kept for parity testing against the OpenMP kernels and for the
/// benchmark baseline. Plain closed forms, no cancellation guards.

/// Triangular product-trapezoidal weight table (row-major, row i has i+1 entries).
std::vector<double> build_weight_table(const Grid& grid, const PsiFunction& psi, double mu);

/// y_i = sum_j w[i][j] x_j against a reference table.
std::vector<double> apply_weight_table(const std::vector<double>& table,
                                       std::span<const double> x, std::size_t n_nodes);

/// Direct serial convolution (builds each row on the fly).
std::vector<double> convolve(const Grid& grid, const PsiFunction& psi, double mu,
                             std::span<const double> x);

/// Plain long-double series for E_alpha(z) without branch switching;
/// usable for moderate arguments only.
double ml_series(double alpha, double z, int terms = 2000);

}  // namespace psifrac::ref
