#include "psifrac/weighted_space.hpp"

#include <cmath>
#include <stdexcept>

#include "psifrac/mittag_leffler.hpp"

namespace psifrac {

double ml_weight(const WeightedSpaceParams& w, double t) {
    const double u = w.psi.eval(t) - w.psi.eval(w.a);
    return ml_eval(w.alpha, w.xi * std::pow(u, w.alpha));
}

std::vector<double> ml_weight_curve(const WeightedSpaceParams& w, const Grid& grid) {
    std::vector<double> out(grid.size());
    const double ua = w.psi.eval(w.a);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = w.psi.eval(grid.node(i)) - ua;
        out[i] = ml_eval(w.alpha, w.xi * std::pow(u, w.alpha));
    }
    return out;
}

double weighted_norm(const Trace& x, const WeightedSpaceParams& w) {
    if (x.nodes() == 0) throw std::domain_error("weighted_norm: empty trace");
    if (!(w.xi > 0.0)) throw std::domain_error("weighted_norm: xi must be > 0");
    const double ua = w.psi.eval(w.a);
    double worst = 0.0;
    for (std::size_t i = x.first_node(); i < x.nodes(); ++i) {
        const double u = w.psi.eval(x.grid().node(i)) - ua;
        const double weight = ml_eval(w.alpha, w.xi * std::pow(u, w.alpha));
        const double v = x.node_norm(i) / weight;
        if (v > worst) worst = v;
    }
    return worst;
}

double weighted_metric(const Trace& x, const Trace& y, const WeightedSpaceParams& w) {
    if (x.nodes() == 0) throw std::domain_error("weighted_metric: empty trace");
    if (x.dim() != y.dim() || !x.grid().same_nodes_as(y.grid()))
        throw std::domain_error("weighted_metric: traces on different grids");
    const double ua = w.psi.eval(w.a);
    const std::size_t start = std::max(x.first_node(), y.first_node());
    double worst = 0.0;
    for (std::size_t i = start; i < x.nodes(); ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < x.dim(); ++c) {
            const double d = x.at(i, c) - y.at(i, c);
            s += d * d;
        }
        const double u = w.psi.eval(x.grid().node(i)) - ua;
        const double weight = ml_eval(w.alpha, w.xi * std::pow(u, w.alpha));
        const double v = std::sqrt(s) / weight;
        if (v > worst) worst = v;
    }
    return worst;
}

}  // namespace psifrac
