#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "psifrac/grid.hpp"

namespace psifrac {

/// Grid samples of an R^dim valued function plus solver metadata.
/// When singular_endpoint is set, the value at t_0 is not meaningful
/// (weighted IVP solutions blow up at a for gamma < 1) and every norm,
/// metric and bound check skips node 0.
class Trace {
public:
    Trace(Grid grid, std::size_t dim = 1, double fill = 0.0);

    const Grid& grid() const { return grid_; }
    std::size_t dim() const { return dim_; }
    std::size_t nodes() const { return grid_.size(); }

    double& at(std::size_t node, std::size_t comp = 0) { return values_[node * dim_ + comp]; }
    double at(std::size_t node, std::size_t comp = 0) const { return values_[node * dim_ + comp]; }
    std::span<double> node_values(std::size_t node) { return {values_.data() + node * dim_, dim_}; }
    std::span<const double> node_values(std::size_t node) const { return {values_.data() + node * dim_, dim_}; }
    std::span<const double> raw() const { return values_; }
    std::span<double> raw() { return values_; }

    /// Euclidean norm of the component vector at a node.
    double node_norm(std::size_t node) const;

    std::size_t first_node() const { return singular_endpoint ? 1 : 0; }

    bool singular_endpoint = false;
    /// Leading power s of the blow-up near a in psi-coordinates, i.e.
    /// x ~ C (psi(t)-psi(a))^s: lets the quadrature integrate the first cell
    /// against the exact power instead of dropping it. NaN when unknown.
    double singular_exponent = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> history;  // per-iteration weighted metric d(x_{k+1}, x_k)
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;

private:
    Grid grid_;
    std::size_t dim_;
    std::vector<double> values_;
};

/// Samples a scalar callable on the grid.
template <typename F>
Trace sample(const Grid& grid, F&& f, bool singular_endpoint = false,
             double singular_exponent = std::numeric_limits<double>::quiet_NaN()) {
    Trace tr(grid, 1);
    tr.singular_endpoint = singular_endpoint;
    tr.singular_exponent = singular_exponent;
    for (std::size_t i = singular_endpoint ? 1 : 0; i < grid.size(); ++i)
        tr.at(i) = f(grid.node(i));
    if (singular_endpoint) tr.at(0) = std::numeric_limits<double>::quiet_NaN();
    return tr;
}

}  // namespace psifrac
