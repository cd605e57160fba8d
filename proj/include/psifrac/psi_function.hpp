#pragma once

#include <functional>
#include <string>

namespace psifrac {

enum class PsiFamily { identity, power, logarithm, exponential, custom };

/// An admissible weight function psi for the psi-fractional operators:
/// strictly increasing with a continuous positive derivative on the
/// working interval. The built-in families cover the CLI registry;
/// custom eval/deriv pairs are accepted at the library level.
class PsiFunction {
public:
    static PsiFunction identity();
    static PsiFunction power(double rho);          // psi(t) = t^rho, rho > 0
    static PsiFunction logarithm();                // psi(t) = ln t
    static PsiFunction exponential(double sigma);  // psi(t) = e^{sigma t}, sigma > 0
    static PsiFunction custom(std::function<double(double)> eval,
                              std::function<double(double)> deriv,
                              std::string name);

    double eval(double t) const;
    double deriv(double t) const;

    PsiFamily family() const { return family_; }
    double rho() const { return rho_; }
    double sigma() const { return sigma_; }
    const std::string& name() const { return name_; }

    /// Checks admissibility on [a,b]: domain constraints of the family and
    /// deriv > 0 at sample points. Throws std::domain_error on violation.
    void validate_interval(double a, double b) const;

private:
    PsiFunction() = default;

    PsiFamily family_ = PsiFamily::identity;
    double rho_ = 1.0;
    double sigma_ = 1.0;
    std::string name_ = "identity";
    std::function<double(double)> custom_eval_;
    std::function<double(double)> custom_deriv_;
};

/// psi'(s) * (psi(t) - psi(s))^(alpha-1); the weakly singular Volterra kernel.
/// Requires s < t and 0 < alpha <= 1.
double volterra_kernel(const PsiFunction& psi, double alpha, double t, double s);

/// (psi(t) - psi(a))^(gamma-1) / Gamma(gamma); the endpoint weight that
/// carries the weighted initial condition. Requires t > a.
double psi_gamma_weight(const PsiFunction& psi, double gamma, double t, double a);

}  // namespace psifrac
