#pragma once

#include <cstddef>
#include <vector>

#include "psifrac/gronwall.hpp"
#include "psifrac/solver.hpp"

namespace psifrac {

/// Hypothesis constants for the a-priori and dependence bounds. The suprema
/// (C1, C2, Q_bar) are computed on the grid and reported together with the
/// node attaining them.
struct EstimateInputs {
    double N_const = 0.0;  // f Lipschitz constant, must be < 1 where used
    double C1 = 0.0;
    std::size_t C1_node = 0;
    double C2 = 0.0;
    std::size_t C2_node = 0;
    std::vector<double> p;  // f Lipschitz profile (ivp forms)
    TriangularKernel r;     // k Lipschitz kernel
    double eps1 = 0.0;
    double eps2 = 0.0;
    double Q = 0.0;
    double Q_bar = 0.0;
    std::size_t Q_bar_node = 0;
    double mu = 0.0;
    double mu0 = 0.0;
    double N_bar = 0.0;
    std::vector<double> q_fun;
    bool q_discrepancy = false;  // Q and Q_bar differ (ivp parameter form)

    explicit EstimateInputs(Grid grid) : r(TriangularKernel(std::move(grid))) {}
};

/// |x(t)| <= (C1/(1-N)) E_alpha[(N/(1-N)) r(t,t) (psi(t)-psi(a))^alpha].
BoundCurve apriori_bound_integral(const EstimateInputs& in, const PsiFunction& psi,
                                  double alpha, const Grid& grid);

/// |x(t)| <= C2 E_alpha{p Gamma(alpha) E_alpha[r Gamma(alpha) w^alpha] w^alpha};
/// delegates to the nested Mittag-Leffler bound with g~ = C2.
BoundCurve apriori_bound_ivp(const EstimateInputs& in, const PsiFunction& psi, double alpha,
                             const Grid& grid);

/// |x - y| <= (eps1/(1-N)) E_alpha[(N/(1-N)) r(t,t) w^alpha].
BoundCurve dependence_bound_integral(const EstimateInputs& in, const PsiFunction& psi,
                                     double alpha, const Grid& grid);

/// |x - y| <= eps2 x nested shape.
BoundCurve dependence_bound_ivp(const EstimateInputs& in, const PsiFunction& psi,
                                double alpha, const Grid& grid);

/// |z1 - z2| <= (Q |mu-mu0| / (1-Nbar)) E_alpha[(Nbar/(1-Nbar)) r(t,t) w^alpha].
BoundCurve parameter_dependence_integral(const EstimateInputs& in, const PsiFunction& psi,
                                         double alpha, const Grid& grid);

/// |z1 - z2| <= Qbar |mu-mu0| x nested shape (the integrated bound Qbar is the
/// coefficient consistent with the proof; the report flags Q != Qbar).
BoundCurve parameter_dependence_ivp(const EstimateInputs& in, const PsiFunction& psi,
                                    double alpha, const Grid& grid);

struct BoundCheckReport {
    bool holds = false;
    double worst_margin = 0.0;  // max ||trace|| / bound over included nodes
    double worst_node = 0.0;    // grid point attaining it
};

/// Nodewise comparison ||trace(t_i)|| <= bound(t_i) (1 + 1e-9) + 1e-12,
/// skipping node 0 when either side is singular there.
BoundCheckReport check_bound(const Trace& x, const BoundCurve& bound);

/// Same check on the difference of two traces.
BoundCheckReport check_bound_difference(const Trace& x, const Trace& y,
                                        const BoundCurve& bound);

/// Grid supremum of ||f(t, 0, (1/Gamma) int W(t,s,0) ds)|| with its node.
void compute_C1(const IntegralProblem& problem, const Grid& grid, EstimateInputs& out);

/// Grid supremum of ||Psi^gamma(t,a) x0 + I^alpha f(.,0,.)|| with its node
/// (node 0 excluded when gamma < 1).
void compute_C2(const IvpProblem& problem, const Grid& grid, EstimateInputs& out);

/// Fills r (and p for ivp use) from the problem's Lipschitz metadata.
EstimateInputs estimate_inputs(const IntegralProblem& problem, const Grid& grid);
EstimateInputs estimate_inputs(const IvpProblem& problem, const Grid& grid);

/// Grid supremum of I^{alpha,psi} q with its node (parameter-dependence forms).
void compute_Q_bar(const std::vector<double>& q_samples, const PsiFunction& psi, double alpha,
                   const Grid& grid, EstimateInputs& out);

}  // namespace psifrac
