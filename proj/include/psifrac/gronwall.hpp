#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "psifrac/grid.hpp"
#include "psifrac/psi_function.hpp"
#include "psifrac/trace.hpp"

namespace psifrac {

/// Kernel values r(t_i, sigma_j) on the grid triangle j <= i.
class TriangularKernel {
public:
    explicit TriangularKernel(Grid grid);
    static TriangularKernel constant(Grid grid, double value);
    static TriangularKernel from_callable(Grid grid,
                                          const std::function<double(double, double)>& fn);

    const Grid& grid() const { return grid_; }
    double at(std::size_t i, std::size_t j) const { return v_[i * (i + 1) / 2 + j]; }
    double& at(std::size_t i, std::size_t j) { return v_[i * (i + 1) / 2 + j]; }
    double diag(std::size_t i) const { return at(i, i); }

    /// Bilinear interpolation for off-node queries, clamped to the triangle.
    double interpolate(double t, double sigma) const;

private:
    Grid grid_;
    std::vector<double> v_;
};

/// Data for the integral-inequality bounds. v and g feed the series and
/// Mittag-Leffler forms; p and g_tilde feed the nested form; r is shared.
struct GronwallData {
    Grid grid;
    PsiFunction psi = PsiFunction::identity();
    double alpha = 0.5;  // (0,1]; 1 only for the classical reductions
    std::vector<double> v, g;        // series / ML forms
    std::vector<double> p, g_tilde;  // nested form
    TriangularKernel r;

    /// Nonnegativity everywhere; g (and g_tilde when present) nondecreasing.
    void validate() const;
};

/// Per-node certified upper bound with its provenance.
struct BoundCurve {
    Grid grid;
    std::vector<double> values;
    std::string provenance;
    bool skip_node0 = false;
    double last_term_max = 0.0;  // truncation diagnostic (series form)
    int terms_used = 0;
};

/// Truncated series bound: v(t) + sum_{k=1..k_max} (g Gamma(alpha))^k/Gamma(alpha k)
/// times the product-quadrature of the order-(alpha k) kernel against r v.
/// Stops early once the k-th term's nodewise max drops below 1e-14 of the sum.
BoundCurve series_bound(const GronwallData& data, int k_max = 40);

/// Mittag-Leffler bound v(t) E_alpha[g(t) r(t,t) Gamma(alpha) (psi(t)-psi(a))^alpha].
/// Requires r's diagonal and v nondecreasing along the grid.
BoundCurve ml_bound(const GronwallData& data);

/// Nested bound g~(t) E_alpha[p(t) Gamma(alpha) E_alpha(r(t,t) Gamma(alpha) w^alpha) w^alpha]
/// with w = psi(t)-psi(a).
BoundCurve nested_ml_bound(const GronwallData& data);

enum class GronwallMode { lemma4, lemma5 };

/// Discrete extremal solution: the equality version of the inequality solved
/// forward node by node (linear in the already-known values). Dominates every
/// sample path that satisfies the strict inequality with the same data.
Trace extremal_solve(const GronwallData& data, GronwallMode mode);

/// Hypothesis-respecting random data for property experiments: nonnegative
/// piecewise-linear profiles, nondecreasing where the bound hypotheses
/// require, with variation bounded away from the degenerate constant cases
/// (there the bounds hold with equality and finite-grid quadrature noise
/// would dominate the margin).
GronwallData random_hypothesis_data(const Grid& grid, std::mt19937_64& rng,
                                    GronwallMode mode);

}  // namespace psifrac
