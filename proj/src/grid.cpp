#include "psifrac/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace psifrac {

Grid::Grid(double a, double b, Grading grading, double q, std::vector<double> nodes)
    : a_(a), b_(b), grading_(grading), q_(q),
      nodes_(std::make_shared<const std::vector<double>>(std::move(nodes))) {
    for (std::size_t i = 0; i + 1 < nodes_->size(); ++i)
        if (!((*nodes_)[i] < (*nodes_)[i + 1]))
            throw std::domain_error(
                "grid nodes are not strictly increasing (grading too strong for this "
                "node count at double precision)");
}

Grid Grid::uniform(double a, double b, std::size_t n_cells) {
    if (!(b > a)) throw std::domain_error("grid requires b > a");
    if (n_cells < 1) throw std::domain_error("grid requires at least one cell");
    std::vector<double> nodes(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i)
        nodes[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n_cells);
    nodes.front() = a;
    nodes.back() = b;
    return Grid(a, b, Grading::uniform, 1.0, std::move(nodes));
}

Grid Grid::graded(double a, double b, std::size_t n_cells, double q) {
    if (!(b > a)) throw std::domain_error("grid requires b > a");
    if (n_cells < 1) throw std::domain_error("grid requires at least one cell");
    if (!(q >= 1.0)) throw std::domain_error("grading exponent must be >= 1");
    std::vector<double> nodes(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(n_cells);
        nodes[i] = a + (b - a) * std::pow(r, q);
    }
    nodes.front() = a;
    nodes.back() = b;
    return Grid(a, b, Grading::graded, q, std::move(nodes));
}

bool Grid::same_nodes_as(const Grid& other) const {
    if (nodes_ == other.nodes_) return true;
    return *nodes_ == *other.nodes_;
}

}  // namespace psifrac
