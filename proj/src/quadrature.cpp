#include "psifrac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace psifrac {

namespace quad_detail {

namespace {

// (A^mu - B^mu)/mu for A >= B >= 0, stable when A-B << A.
inline double power_diff(double A, double B, double h, double mu) {
    if (B <= 0.0) return std::pow(A, mu) / mu;
    return -std::pow(A, mu) * std::expm1(mu * std::log1p(-h / A)) / mu;
}

}  // namespace

void fill_row(std::span<const double> u, std::size_t i, double mu, double* row) {
    for (std::size_t j = 0; j <= i; ++j) row[j] = 0.0;
    const double U = u[i];
    for (std::size_t j = 0; j + 1 <= i; ++j) {
        const double h = u[j + 1] - u[j];
        const double A = U - u[j];
        const double B = U - u[j + 1];
        const double p0 = power_diff(A, B, h, mu);
        const double q0 = power_diff(A, B, h, mu + 1.0);
        const double p1 = A * p0 - q0;  // moment against (u - u_j)
        row[j] += p0 - p1 / h;
        row[j + 1] += p1 / h;
    }
}

double first_cell_right_weight(std::span<const double> u, std::size_t i, double mu) {
    if (i == 0) return 0.0;
    const double U = u[i];
    const double h = u[1] - u[0];
    const double A = U - u[0];
    const double B = U - u[1];
    const double p0 = power_diff(A, B, h, mu);
    const double q0 = power_diff(A, B, h, mu + 1.0);
    return (A * p0 - q0) / h;
}

}  // namespace quad_detail

ConvolutionWeights::ConvolutionWeights(Grid grid, const PsiFunction& psi, double mu)
    : grid_(std::move(grid)), mu_(mu) {
    if (!(mu > 0.0)) throw std::domain_error("ConvolutionWeights: mu must be > 0");
    const std::size_t n = grid_.size();
    u_.resize(n);
    for (std::size_t j = 0; j < n; ++j) u_[j] = psi.eval(grid_.node(j));
    w_.assign(n * (n + 1) / 2, 0.0);
    c0r_.assign(n, 0.0);
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < ni; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        quad_detail::fill_row(u_, ii, mu_, w_.data() + ii * (ii + 1) / 2);
        c0r_[ii] = quad_detail::first_cell_right_weight(u_, ii, mu_);
    }
}

double ConvolutionWeights::apply_at(std::size_t i, std::span<const double> x,
                                    bool singular_start) const {
    const double* r = w_.data() + i * (i + 1) / 2;
    double acc = 0.0;
    if (singular_start) {
        for (std::size_t j = 1; j <= i; ++j) acc += r[j] * x[j];
        if (i >= 1) acc -= c0r_[i] * x[1];
    } else {
        for (std::size_t j = 0; j <= i; ++j) acc += r[j] * x[j];
    }
    return acc;
}

std::vector<double> ConvolutionWeights::apply(std::span<const double> x,
                                              bool singular_start) const {
    if (x.size() != grid_.size())
        throw std::domain_error("ConvolutionWeights::apply: sample count mismatch");
    const std::size_t n = grid_.size();
    std::vector<double> y(n, 0.0);
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < ni; ++i)
        y[static_cast<std::size_t>(i)] = apply_at(static_cast<std::size_t>(i), x, singular_start);
    return y;
}

std::vector<double> apply_convolution(const Grid& grid, const PsiFunction& psi, double mu,
                                      std::span<const double> x, bool singular_start) {
    if (!(mu > 0.0)) throw std::domain_error("apply_convolution: mu must be > 0");
    if (x.size() != grid.size())
        throw std::domain_error("apply_convolution: sample count mismatch");
    const std::size_t n = grid.size();
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = psi.eval(grid.node(j));
    std::vector<double> y(n, 0.0);
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
    {
        std::vector<double> row(n);
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t ip = 0; ip < ni; ++ip) {
            const std::size_t i = static_cast<std::size_t>(ip);
            quad_detail::fill_row(u, i, mu, row.data());
            double acc = 0.0;
            if (singular_start) {
                for (std::size_t j = 1; j <= i; ++j) acc += row[j] * x[j];
                if (i >= 1) acc -= quad_detail::first_cell_right_weight(u, i, mu) * x[1];
            } else {
                for (std::size_t j = 0; j <= i; ++j) acc += row[j] * x[j];
            }
            y[i] = acc;
        }
    }
    return y;
}

}  // namespace psifrac
