#include "psifrac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "psifrac/mittag_leffler.hpp"

namespace psifrac {

void IntegralProblem::validate() const {
    if (dimension < 1) throw std::domain_error("problem: dimension must be >= 1");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("problem: alpha must be in (0,1]");
    if (!(b > a)) throw std::domain_error("problem: b must exceed a");
    if (!f || !k) throw std::domain_error("problem: f and k must be set");
    if (lipschitz.M < 0.0) throw std::domain_error("problem: M must be >= 0");
    if (!(lipschitz.L > 0.0)) throw std::domain_error("problem: L must be > 0");
    psi.validate_interval(a, b);
}

void IvpProblem::validate() const {
    IntegralProblem::validate();
    if (beta < 0.0 || beta > 1.0) throw std::domain_error("problem: beta must be in [0,1]");
    if (x0.size() != dimension)
        throw std::domain_error("problem: x0 dimension does not match the problem");
}

WeightedSpaceParams space_params(const IntegralProblem& problem, const SolveOptions& opts) {
    double xi = opts.explicit_xi;
    if (!(xi > 0.0)) {
        if (!(opts.delta > 1.0)) throw std::domain_error("solver: delta must be > 1");
        xi = problem.lipschitz.L * opts.delta;
    }
    return {xi, problem.alpha, problem.psi, problem.a};
}

namespace {

/// Inner integral z_i = (1/Gamma(alpha)) sum_j W_ij k(t_i, s_j, x_j) for all
/// nodes, componentwise. The kernel depends on the row, so this is a custom
/// row sweep rather than a plain table apply.
void inner_integrals(const IntegralProblem& problem, const ConvolutionWeights& weights,
                     const Trace& x, Trace& z) {
    const std::size_t n = x.nodes();
    const std::size_t dim = problem.dimension;
    const double inv_gamma = 1.0 / std::tgamma(problem.alpha);
    const Grid& grid = weights.grid();
    const bool singular = x.singular_endpoint;
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
    {
        std::vector<double> acc(dim), kv(dim);
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t ip = 0; ip < ni; ++ip) {
            const std::size_t i = static_cast<std::size_t>(ip);
            const auto row = weights.row(i);
            std::fill(acc.begin(), acc.end(), 0.0);
            const double t = grid.node(i);
            const std::size_t j0 = singular ? 1 : 0;
            for (std::size_t j = j0; j <= i; ++j) {
                double w = row[j];
                if (singular && j == 1 && i >= 1) w -= weights.first_cell_right(i);
                if (w == 0.0 && j < i) continue;
                problem.k(t, grid.node(j), x.node_values(j), kv);
                for (std::size_t c = 0; c < dim; ++c) acc[c] += w * kv[c];
            }
            for (std::size_t c = 0; c < dim; ++c) z.at(i, c) = inv_gamma * acc[c];
        }
    }
}

[[noreturn]] void throw_divergence(const std::string& name, int iteration) {
    std::ostringstream os;
    os << "picard solve of '" << name << "' diverged: non-finite values at iteration "
       << iteration;
    throw std::runtime_error(os.str());
}

bool finite_trace(const Trace& x) {
    for (std::size_t i = x.first_node(); i < x.nodes(); ++i)
        for (std::size_t c = 0; c < x.dim(); ++c)
            if (!std::isfinite(x.at(i, c))) return false;
    return true;
}

}  // namespace

Trace apply_T(const IntegralProblem& problem, const ConvolutionWeights& weights,
              const Trace& x) {
    if (!x.grid().same_nodes_as(weights.grid()))
        throw std::domain_error("apply_T: trace grid does not match the weights");
    const std::size_t n = x.nodes();
    Trace z(x.grid(), problem.dimension);
    inner_integrals(problem, weights, x, z);
    Trace out(x.grid(), problem.dimension);
    for (std::size_t i = 0; i < n; ++i)
        problem.f(x.grid().node(i), x.node_values(i), z.node_values(i), out.node_values(i));
    return out;
}

Trace apply_T(const IntegralProblem& problem, const Grid& grid, const Trace& x) {
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    return apply_T(problem, weights, x);
}

Trace apply_S(const IvpProblem& problem, const ConvolutionWeights& weights, const Trace& x) {
    if (!x.grid().same_nodes_as(weights.grid()))
        throw std::domain_error("apply_S: trace grid does not match the weights");
    const std::size_t n = x.nodes();
    const std::size_t dim = problem.dimension;
    const double gamma = problem.gamma();
    const bool singular = gamma < 1.0;
    const Grid& grid = x.grid();

    Trace z(grid, dim);
    inner_integrals(problem, weights, x, z);

    // f-trace, then the outer fractional integral with the same weight table.
    Trace ftr(grid, dim);
    ftr.singular_endpoint = x.singular_endpoint;
    for (std::size_t i = x.first_node(); i < n; ++i)
        problem.f(grid.node(i), x.node_values(i), z.node_values(i), ftr.node_values(i));

    const double inv_gamma_alpha = 1.0 / std::tgamma(problem.alpha);
    Trace out(grid, dim);
    out.singular_endpoint = singular;
    if (singular) out.singular_exponent = gamma - 1.0;
    std::vector<double> comp(n), integ;
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t i = 0; i < n; ++i) comp[i] = ftr.at(i, c);
        if (ftr.singular_endpoint) comp[0] = 0.0;
        integ = weights.apply(comp, ftr.singular_endpoint);
        for (std::size_t i = (singular ? 1u : 0u); i < n; ++i) {
            const double w = (i == 0) ? ((gamma == 1.0) ? 1.0 : 0.0)
                                      : psi_gamma_weight(problem.psi, gamma, grid.node(i),
                                                         problem.a);
            out.at(i, c) = w * problem.x0[c] + inv_gamma_alpha * integ[i];
        }
        if (singular) out.at(0, c) = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

namespace {

template <typename Problem, typename Step>
Trace picard_loop(const Problem& problem, const SolveOptions& opts, Trace x, Step step) {
    const WeightedSpaceParams w = space_params(problem, opts);
    std::vector<double> history;
    bool converged = false;
    int iterations = 0;
    Trace current = std::move(x);
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        Trace next = step(current);
        if (!finite_trace(next)) throw_divergence(problem.name, iter);
        const double d = weighted_metric(next, current, w);
        if (!std::isfinite(d)) throw_divergence(problem.name, iter);
        current = std::move(next);
        history.push_back(d);
        iterations = iter;
        if (d < opts.tol) {
            converged = true;
            break;
        }
    }
    current.history = std::move(history);
    current.iterations = iterations;
    current.converged = converged;
    return current;
}

}  // namespace

Trace picard_solve_integral(const IntegralProblem& problem, const Grid& grid,
                            const SolveOptions& opts) {
    problem.validate();
    if (grid.node(0) != problem.a || grid.b() != problem.b)
        throw std::domain_error("picard_solve_integral: grid does not span [a,b]");
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);

    // Start from x0(t) = f(t, 0, 0): cheap and one T-application ahead of zero.
    Trace x(grid, problem.dimension);
    std::vector<double> zeros(problem.dimension, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        problem.f(grid.node(i), zeros, zeros, x.node_values(i));

    Trace solution = picard_loop(problem, opts, std::move(x),
                                 [&](const Trace& cur) { return apply_T(problem, weights, cur); });
    Trace image = apply_T(problem, weights, solution);
    solution.residual = weighted_metric(solution, image, space_params(problem, opts));
    return solution;
}

Trace picard_solve_ivp(const IvpProblem& problem, const Grid& grid, const SolveOptions& opts) {
    problem.validate();
    if (grid.node(0) != problem.a || grid.b() != problem.b)
        throw std::domain_error("picard_solve_ivp: grid does not span [a,b]");
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);

    const double gamma = problem.gamma();
    const bool singular = gamma < 1.0;
    Trace x(grid, problem.dimension);
    x.singular_endpoint = singular;
    if (singular) x.singular_exponent = gamma - 1.0;
    for (std::size_t i = singular ? 1u : 0u; i < grid.size(); ++i) {
        const double w = (i == 0) ? 1.0
                                  : psi_gamma_weight(problem.psi, gamma, grid.node(i), problem.a);
        for (std::size_t c = 0; c < problem.dimension; ++c) x.at(i, c) = w * problem.x0[c];
    }
    if (singular)
        for (std::size_t c = 0; c < problem.dimension; ++c)
            x.at(0, c) = std::numeric_limits<double>::quiet_NaN();

    Trace solution = picard_loop(problem, opts, std::move(x),
                                 [&](const Trace& cur) { return apply_S(problem, weights, cur); });
    Trace image = apply_S(problem, weights, solution);
    solution.residual = weighted_metric(solution, image, space_params(problem, opts));
    return solution;
}

namespace {

void certificate_common(const IntegralProblem& problem, double delta,
                        ContractionCertificate& cert) {
    if (!(delta > 1.0)) throw std::domain_error("contraction_certificate: delta must be > 1");
    cert.M = problem.lipschitz.M;
    cert.L = problem.lipschitz.L;
    cert.delta = delta;
    cert.xi = problem.lipschitz.L * delta;
    cert.q_integral = cert.M * (1.0 + 1.0 / delta);
    cert.q_ivp = (cert.M / cert.xi) * (1.0 + 1.0 / delta);
    cert.contractive_integral = cert.q_integral < 1.0;
    cert.contractive_ivp = cert.q_ivp < 1.0;
}

/// f(t_i, 0, (1/Gamma) int W(t,s,0) ds) on every node.
Trace zero_image(const IntegralProblem& problem, const Grid& grid,
                 const ConvolutionWeights& weights) {
    Trace zero(grid, problem.dimension);
    Trace z(grid, problem.dimension);
    inner_integrals(problem, weights, zero, z);
    Trace out(grid, problem.dimension);
    std::vector<double> zeros(problem.dimension, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        problem.f(grid.node(i), zeros, z.node_values(i), out.node_values(i));
    return out;
}

}  // namespace

ContractionCertificate contraction_certificate(const IntegralProblem& problem,
                                               const Grid& grid, double delta) {
    problem.validate();
    ContractionCertificate cert;
    certificate_common(problem, delta, cert);
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    Trace f0 = zero_image(problem, grid, weights);
    const WeightedSpaceParams w{cert.xi, problem.alpha, problem.psi, problem.a};
    const std::vector<double> weight = ml_weight_curve(w, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f0.node_norm(i) / weight[i];
        if (v > cert.d1) {
            cert.d1 = v;
            cert.d1_node = i;
        }
    }
    return cert;
}

ContractionCertificate contraction_certificate(const IvpProblem& problem, const Grid& grid,
                                               double delta) {
    problem.validate();
    ContractionCertificate cert;
    certificate_common(problem, delta, cert);
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    Trace f0 = zero_image(problem, grid, weights);

    const double gamma = problem.gamma();
    const double inv_gamma_alpha = 1.0 / std::tgamma(problem.alpha);
    const WeightedSpaceParams w{cert.xi, problem.alpha, problem.psi, problem.a};
    const std::vector<double> weight = ml_weight_curve(w, grid);

    // d1 of the underlying integral operator, for reference.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f0.node_norm(i) / weight[i];
        if (v > cert.d1) {
            cert.d1 = v;
            cert.d1_node = i;
        }
    }

    std::vector<double> comp(grid.size()), integ;
    std::vector<std::vector<double>> integs(problem.dimension);
    for (std::size_t c = 0; c < problem.dimension; ++c) {
        for (std::size_t i = 0; i < grid.size(); ++i) comp[i] = f0.at(i, c);
        integs[c] = weights.apply(comp, false);
    }
    cert.has_d2 = true;
    const std::size_t start = gamma < 1.0 ? 1 : 0;
    for (std::size_t i = start; i < grid.size(); ++i) {
        const double pw = (i == 0) ? 1.0
                                   : psi_gamma_weight(problem.psi, gamma, grid.node(i),
                                                      problem.a);
        double s = 0.0;
        for (std::size_t c = 0; c < problem.dimension; ++c) {
            const double term = pw * problem.x0[c] - inv_gamma_alpha * integs[c][i];
            s += term * term;
        }
        const double v = std::sqrt(s) / weight[i];
        if (v > cert.d2) {
            cert.d2 = v;
            cert.d2_node = i;
        }
    }
    return cert;
}

double solution_residual(const IntegralProblem& problem, const Grid& grid, const Trace& x,
                         const SolveOptions& opts) {
    Trace image = apply_T(problem, grid, x);
    return weighted_metric(x, image, space_params(problem, opts));
}

double solution_residual(const IvpProblem& problem, const Grid& grid, const Trace& x,
                         const SolveOptions& opts) {
    ConvolutionWeights weights(grid, problem.psi, problem.alpha);
    Trace image = apply_S(problem, weights, x);
    return weighted_metric(x, image, space_params(problem, opts));
}

}  // namespace psifrac
