#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "psifrac/grid.hpp"
#include "psifrac/psi_function.hpp"
#include "psifrac/quadrature.hpp"
#include "psifrac/trace.hpp"
#include "psifrac/weighted_space.hpp"

namespace psifrac {

struct LipschitzInfo {
    double M = 0.0;  // f, both slots jointly
    double L = 1.0;  // k
};

/// x(t) = f(t, x(t), (1/Gamma(alpha)) int_a^t N(t,s) k(t,s,x(s)) ds) on [a,b].
struct IntegralProblem {
    std::size_t dimension = 1;
    double alpha = 0.5;
    PsiFunction psi = PsiFunction::identity();
    double a = 0.0;
    double b = 1.0;
    std::function<void(double t, std::span<const double> x, std::span<const double> z,
                       std::span<double> out)>
        f;
    std::function<void(double t, double s, std::span<const double> x, std::span<double> out)> k;
    LipschitzInfo lipschitz;
    /// Lipschitz kernel r(t,sigma) of k; empty means the constant L.
    std::function<double(double, double)> k_lipschitz_kernel;
    /// Lipschitz profile p(t) of f; empty means the constant M.
    std::function<double(double)> f_lipschitz_profile;
    std::string name = "custom";

    void validate() const;
};

/// The initial-value problem: HD^{alpha,beta,psi} x = f(...) with weighted
/// initial condition I^{1-gamma,psi} x(a) = x0.
struct IvpProblem : IntegralProblem {
    double beta = 1.0;
    std::vector<double> x0;

    double gamma() const { return alpha + beta * (1.0 - alpha); }
    void validate() const;
};

struct ContractionCertificate {
    double M = 0.0;
    double L = 0.0;
    double delta = 0.0;
    double xi = 0.0;  // L * delta
    double q_integral = 0.0;  // M (1 + 1/delta)
    double q_ivp = 0.0;       // (M/xi)(1 + 1/delta)
    bool contractive_integral = false;
    bool contractive_ivp = false;
    double d1 = 0.0;  // weighted sup of f(t,0, int W(t,s,0))
    std::size_t d1_node = 0;
    double d2 = 0.0;  // ivp analogue with the endpoint-weight term
    std::size_t d2_node = 0;
    bool has_d2 = false;
};

struct SolveOptions {
    double tol = 1e-10;
    int max_iter = 200;
    double delta = 2.0;     // > 1
    double explicit_xi = 0.0;  // when > 0, overrides xi = L * delta
};

/// Weighted space used by a solve: xi = L * delta unless overridden.
WeightedSpaceParams space_params(const IntegralProblem& problem, const SolveOptions& opts);

/// One application of the fixed-point operator of the integral equation.
Trace apply_T(const IntegralProblem& problem, const ConvolutionWeights& weights,
              const Trace& x);
Trace apply_T(const IntegralProblem& problem, const Grid& grid, const Trace& x);

/// One application of the fixed-point operator of the IVP form:
/// Psi^gamma(t,a) x0 + I^{alpha,psi} f(s, x(s), inner integral).
Trace apply_S(const IvpProblem& problem, const ConvolutionWeights& weights, const Trace& x);

/// Picard iteration from x_0(t) = f(t,0,0); stops when the weighted metric
/// between iterates drops below tol. Non-contractive problems run to
/// max_iter and report converged = false; non-finite iterates throw.
Trace picard_solve_integral(const IntegralProblem& problem, const Grid& grid,
                            const SolveOptions& opts = {});

/// Picard iteration from x_0(t) = Psi^gamma(t,a) x0. For gamma < 1 the trace
/// is singular at a and all metrics skip node 0.
Trace picard_solve_ivp(const IvpProblem& problem, const Grid& grid,
                       const SolveOptions& opts = {});

ContractionCertificate contraction_certificate(const IntegralProblem& problem,
                                               const Grid& grid, double delta);
ContractionCertificate contraction_certificate(const IvpProblem& problem, const Grid& grid,
                                               double delta);

/// A-posteriori check: d_{xi,inf}(x, Tx) (or the S-operator image for IVPs).
double solution_residual(const IntegralProblem& problem, const Grid& grid, const Trace& x,
                         const SolveOptions& opts = {});
double solution_residual(const IvpProblem& problem, const Grid& grid, const Trace& x,
                         const SolveOptions& opts = {});

}  // namespace psifrac
