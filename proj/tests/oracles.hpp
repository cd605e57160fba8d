#pragma once

#include <functional>

#include "psifrac/psi_function.hpp"

// Independent oracles for the test suites. These deliberately avoid the
// library's evaluation paths: gamma comes from a Lanczos approximation,
// Mittag-Leffler from a long-double brute-force series, and the weakly
// singular integrals from dyadically refined Gauss-Legendre panels.
namespace oracles {

/// Lanczos gamma (g = 7, 9 coefficients), |rel err| ~ 1e-13.
double gamma(double x);

/// Brute-force E_alpha(z): long-double compensated series, default 300 terms.
double ml(double alpha, double z, int terms = 300);

/// E_{1/2}(z) = exp(z^2) erfc(-z); a second, closed-form route for alpha = 1/2.
double ml_half(double z);

/// int_a^t psi'(s) (psi(t)-psi(s))^(mu-1) f(s) ds by composite Gauss-Legendre
/// on panels refined dyadically toward t (and toward a when f is singular
/// there), plus an analytic power-law tail at t.
double weak_integral(const psifrac::PsiFunction& psi, double mu, double a, double t,
                     const std::function<double(double)>& f, bool singular_at_a = false);

}  // namespace oracles
