#pragma once

#include <vector>

#include "psifrac/psi_function.hpp"
#include "psifrac/trace.hpp"

namespace psifrac {

/// Parameters of the weighted space: the sup norm is taken against the
/// weight E_alpha[xi (psi(t) - psi(a))^alpha], the fractional analogue of
/// the Bielecki exponential weight.
struct WeightedSpaceParams {
    double xi;
    double alpha;
    PsiFunction psi;
    double a;
};

/// The weight E_alpha[xi (psi(t) - psi(a))^alpha] at a point.
double ml_weight(const WeightedSpaceParams& w, double t);

/// Weight at every grid node.
std::vector<double> ml_weight_curve(const WeightedSpaceParams& w, const Grid& grid);

/// max_i ||x(t_i)|| / weight(t_i); skips node 0 for singular-endpoint traces.
double weighted_norm(const Trace& x, const WeightedSpaceParams& w);

/// weighted_norm of the difference; requires both traces on the same grid.
double weighted_metric(const Trace& x, const Trace& y, const WeightedSpaceParams& w);

}  // namespace psifrac
