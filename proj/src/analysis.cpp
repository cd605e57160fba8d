#include "psifrac/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "psifrac/frac_calculus.hpp"
#include "psifrac/mittag_leffler.hpp"

namespace psifrac {

namespace {

std::vector<double> psi_gaps(const Grid& grid, const PsiFunction& psi) {
    std::vector<double> w(grid.size());
    const double ua = psi.eval(grid.a());
    for (std::size_t i = 0; i < grid.size(); ++i) w[i] = psi.eval(grid.node(i)) - ua;
    return w;
}

BoundCurve corollary_shape(double front, double rate_scale, const TriangularKernel& r,
                           const PsiFunction& psi, double alpha, const Grid& grid,
                           std::string provenance) {
    BoundCurve out{grid, std::vector<double>(grid.size()), std::move(provenance), false, 0.0, 0};
    const std::vector<double> w = psi_gaps(grid, psi);
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.values[i] =
            front * ml_eval(alpha, rate_scale * r.diag(i) * std::pow(w[i], alpha));
    return out;
}

BoundCurve nested_shape(double front, const std::vector<double>& p, const TriangularKernel& r,
                        const PsiFunction& psi, double alpha, const Grid& grid,
                        std::string provenance) {
    if (p.size() != grid.size())
        throw std::domain_error("bound: p profile does not match the grid");
    GronwallData data{grid, psi, alpha, {}, {}, p,
                      std::vector<double>(grid.size(), front), r};
    BoundCurve out = nested_ml_bound(data);
    out.provenance = std::move(provenance);
    return out;
}

}  // namespace

BoundCurve apriori_bound_integral(const EstimateInputs& in, const PsiFunction& psi,
                                  double alpha, const Grid& grid) {
    if (!(in.N_const < 1.0))
        throw std::domain_error("apriori_bound_integral: N must be < 1");
    const double front = in.C1 / (1.0 - in.N_const);
    const double rate = in.N_const / (1.0 - in.N_const);
    return corollary_shape(front, rate, in.r, psi, alpha, grid, "theorem3");
}

BoundCurve apriori_bound_ivp(const EstimateInputs& in, const PsiFunction& psi, double alpha,
                             const Grid& grid) {
    return nested_shape(in.C2, in.p, in.r, psi, alpha, grid, "theorem4");
}

BoundCurve dependence_bound_integral(const EstimateInputs& in, const PsiFunction& psi,
                                     double alpha, const Grid& grid) {
    if (!(in.N_const < 1.0))
        throw std::domain_error("dependence_bound_integral: N must be < 1");
    const double front = in.eps1 / (1.0 - in.N_const);
    const double rate = in.N_const / (1.0 - in.N_const);
    return corollary_shape(front, rate, in.r, psi, alpha, grid, "theorem7");
}

BoundCurve dependence_bound_ivp(const EstimateInputs& in, const PsiFunction& psi,
                                double alpha, const Grid& grid) {
    return nested_shape(in.eps2, in.p, in.r, psi, alpha, grid, "theorem8");
}

BoundCurve parameter_dependence_integral(const EstimateInputs& in, const PsiFunction& psi,
                                         double alpha, const Grid& grid) {
    if (!(in.N_bar < 1.0))
        throw std::domain_error("parameter_dependence_integral: N_bar must be < 1");
    const double front = in.Q * std::fabs(in.mu - in.mu0) / (1.0 - in.N_bar);
    const double rate = in.N_bar / (1.0 - in.N_bar);
    return corollary_shape(front, rate, in.r, psi, alpha, grid, "theorem9");
}

BoundCurve parameter_dependence_ivp(const EstimateInputs& in, const PsiFunction& psi,
                                    double alpha, const Grid& grid) {
    const double front = in.Q_bar * std::fabs(in.mu - in.mu0);
    return nested_shape(front, in.p, in.r, psi, alpha, grid, "theorem10");
}

namespace {

BoundCheckReport run_check(const Grid& grid, std::size_t start, std::size_t n,
                           const std::vector<double>& norms, const BoundCurve& bound) {
    BoundCheckReport rep;
    rep.holds = true;
    for (std::size_t i = start; i < n; ++i) {
        const double b = bound.values[i];
        const double v = norms[i];
        double margin;
        if (v <= 1e-300)
            margin = 0.0;
        else
            margin = v / b;
        if (margin > rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_node = grid.node(i);
        }
        if (!(v <= b * (1.0 + 1e-9) + 1e-12)) rep.holds = false;
    }
    return rep;
}

}  // namespace

BoundCheckReport check_bound(const Trace& x, const BoundCurve& bound) {
    if (!x.grid().same_nodes_as(bound.grid))
        throw std::domain_error("check_bound: trace and bound on different grids");
    const std::size_t start = std::max<std::size_t>(x.first_node(), bound.skip_node0 ? 1 : 0);
    std::vector<double> norms(x.nodes());
    for (std::size_t i = start; i < x.nodes(); ++i) norms[i] = x.node_norm(i);
    return run_check(x.grid(), start, x.nodes(), norms, bound);
}

BoundCheckReport check_bound_difference(const Trace& x, const Trace& y,
                                        const BoundCurve& bound) {
    if (!x.grid().same_nodes_as(y.grid()) || !x.grid().same_nodes_as(bound.grid))
        throw std::domain_error("check_bound_difference: grids do not match");
    if (x.dim() != y.dim())
        throw std::domain_error("check_bound_difference: dimensions do not match");
    std::size_t start = std::max(x.first_node(), y.first_node());
    start = std::max<std::size_t>(start, bound.skip_node0 ? 1 : 0);
    std::vector<double> norms(x.nodes(), 0.0);
    for (std::size_t i = start; i < x.nodes(); ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < x.dim(); ++c) {
            const double d = x.at(i, c) - y.at(i, c);
            s += d * d;
        }
        norms[i] = std::sqrt(s);
    }
    return run_check(x.grid(), start, x.nodes(), norms, bound);
}

void compute_C1(const IntegralProblem& problem, const Grid& grid, EstimateInputs& out) {
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    Trace zero(grid, problem.dimension);
    Trace image = apply_T(problem, weights, zero);
    out.C1 = 0.0;
    out.C1_node = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = image.node_norm(i);
        if (v > out.C1) {
            out.C1 = v;
            out.C1_node = i;
        }
    }
}

void compute_C2(const IvpProblem& problem, const Grid& grid, EstimateInputs& out) {
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    Trace zero(grid, problem.dimension);
    Trace image = apply_S(problem, weights, zero);  // Psi^gamma x0 + I^alpha f(.,0,.)
    out.C2 = 0.0;
    out.C2_node = 0;
    for (std::size_t i = image.first_node(); i < grid.size(); ++i) {
        const double v = image.node_norm(i);
        if (v > out.C2) {
            out.C2 = v;
            out.C2_node = i;
        }
    }
}

namespace {

void fill_lipschitz_fields(const IntegralProblem& problem, const Grid& grid,
                           EstimateInputs& out) {
    out.N_const = problem.lipschitz.M;
    out.N_bar = problem.lipschitz.M;
    out.r = problem.k_lipschitz_kernel
                ? TriangularKernel::from_callable(grid, problem.k_lipschitz_kernel)
                : TriangularKernel::constant(grid, problem.lipschitz.L);
    out.p.assign(grid.size(), problem.lipschitz.M);
    if (problem.f_lipschitz_profile)
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.p[i] = problem.f_lipschitz_profile(grid.node(i));
}

}  // namespace

EstimateInputs estimate_inputs(const IntegralProblem& problem, const Grid& grid) {
    EstimateInputs out(grid);
    fill_lipschitz_fields(problem, grid, out);
    compute_C1(problem, grid, out);
    return out;
}

EstimateInputs estimate_inputs(const IvpProblem& problem, const Grid& grid) {
    EstimateInputs out(grid);
    fill_lipschitz_fields(problem, grid, out);
    compute_C1(problem, grid, out);
    compute_C2(problem, grid, out);
    return out;
}

void compute_Q_bar(const std::vector<double>& q_samples, const PsiFunction& psi, double alpha,
                   const Grid& grid, EstimateInputs& out) {
    Trace q(grid, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) q.at(i) = q_samples[i];
    Trace integ = frac_integral_order(alpha, psi, grid.a(), q);
    out.Q_bar = 0.0;
    out.Q_bar_node = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (integ.at(i) > out.Q_bar) {
            out.Q_bar = integ.at(i);
            out.Q_bar_node = i;
        }
    }
    out.q_discrepancy = std::fabs(out.Q_bar - out.Q) > 1e-12 * std::max(1.0, out.Q);
}

}  // namespace psifrac
