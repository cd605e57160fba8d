#pragma once

#include "psifrac/grid.hpp"
#include "psifrac/psi_function.hpp"
#include "psifrac/quadrature.hpp"
#include "psifrac/trace.hpp"

namespace psifrac {

/// Order/type pair of the psi-Hilfer operator family. gamma = alpha + beta(1-alpha)
/// governs the endpoint weight and the weighted initial condition.
struct OperatorParams {
    double alpha = 0.5;    // order, (0,1]
    double beta = 1.0;     // type, [0,1]
    PsiFunction psi = PsiFunction::identity();
    double a = 0.0;

    double gamma() const { return alpha + beta * (1.0 - alpha); }
    void validate() const;
};

/// psi-Riemann-Liouville fractional integral of arbitrary positive order on
/// the grid (product-trapezoidal, includes the 1/Gamma factor). order == 0
/// returns the input unchanged.
Trace frac_integral_order(double order, const PsiFunction& psi, double a,
                          const Trace& x);

/// I^{alpha,psi} x with the module's standard parameters.
Trace frac_integral(const OperatorParams& params, const Trace& x);

/// psi-Hilfer derivative: inner integral of order (1-beta)(1-alpha), then the
/// psi-scaled first derivative (three-point stencils in psi-coordinates),
/// then the outer integral of order beta(1-alpha). Componentwise on vectors.
Trace hilfer_derivative(const OperatorParams& params, const Trace& x);

/// Max relative error of I^{alpha,psi} E_alpha[xi(psi-psi(a))^alpha] against
/// the closed form (1/xi)(E_alpha[...] - 1), over nodes t_i > a.
double verify_lemma1(double alpha, double xi, const PsiFunction& psi, const Grid& grid);

struct CompositionResiduals {
    double t1;  // sup | HD(I^alpha x) - x | over interior nodes
    double t2;  // sup | I^alpha(HD x) - [x - Psi^gamma(t,a) c0] | over interior nodes
};

/// Residuals of the two composition identities on a smooth scalar trace.
/// The weighted initial value c0 is extrapolated from the first interior nodes.
CompositionResiduals verify_composition(const OperatorParams& params, const Trace& x);

namespace fd_detail {
/// Derivative at u[at] of the quadratic through nodes j0, j0+1, j0+2.
double deriv3(std::span<const double> u, std::span<const double> y,
              std::size_t at, std::size_t j0);
}  // namespace fd_detail

}  // namespace psifrac
