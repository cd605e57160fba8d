#include "psifrac/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace psifrac::ref {

std::vector<double> build_weight_table(const Grid& grid, const PsiFunction& psi, double mu) {
    if (!(mu > 0.0)) throw std::domain_error("ref::build_weight_table: mu must be > 0");
    const std::size_t n = grid.size();
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = psi.eval(grid.node(j));
    std::vector<double> w(n * (n + 1) / 2, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double* row = w.data() + i * (i + 1) / 2;
        const double U = u[i];
        for (std::size_t j = 0; j + 1 <= i; ++j) {
            const double h = u[j + 1] - u[j];
            const double A = U - u[j];
            const double B = U - u[j + 1];
            const double p0 = (std::pow(A, mu) - std::pow(B, mu)) / mu;
            const double q0 = (std::pow(A, mu + 1.0) - std::pow(B, mu + 1.0)) / (mu + 1.0);
            const double p1 = A * p0 - q0;
            row[j] += p0 - p1 / h;
            row[j + 1] += p1 / h;
        }
    }
    return w;
}

std::vector<double> apply_weight_table(const std::vector<double>& table,
                                       std::span<const double> x, std::size_t n_nodes) {
    std::vector<double> y(n_nodes, 0.0);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        const double* row = table.data() + i * (i + 1) / 2;
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

std::vector<double> convolve(const Grid& grid, const PsiFunction& psi, double mu,
                             std::span<const double> x) {
    std::vector<double> table = build_weight_table(grid, psi, mu);
    return apply_weight_table(table, x, grid.size());
}

double ml_series(double alpha, double z, int terms) {
    if (!(alpha > 0.0)) throw std::domain_error("ref::ml_series: alpha must be > 0");
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (int k = 0; k < terms; ++k) {
        const long double lt = k * std::log(std::fabs((long double)z)) -
                               std::lgamma((long double)(alpha * k + 1.0));
        long double term = std::exp(lt);
        if (z < 0.0 && (k & 1)) term = -term;
        if (z == 0.0 && k > 0) break;
        const long double t = sum + term;
        if (std::fabs((double)sum) >= std::fabs((double)term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        if (k > 4 && std::fabs((double)term) < 1e-30 * std::fabs((double)sum)) break;
    }
    return (double)(sum + comp);
}

}  // namespace psifrac::ref
