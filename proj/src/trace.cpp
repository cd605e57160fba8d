#include "psifrac/trace.hpp"

#include <cmath>

namespace psifrac {

Trace::Trace(Grid grid, std::size_t dim, double fill)
    : grid_(std::move(grid)), dim_(dim), values_(grid_.size() * dim, fill) {}

double Trace::node_norm(std::size_t node) const {
    if (dim_ == 1) return std::fabs(values_[node]);
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
        const double v = values_[node * dim_ + c];
        s += v * v;
    }
    return std::sqrt(s);
}

}  // namespace psifrac
