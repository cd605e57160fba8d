#include "psifrac/psi_function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace psifrac {

PsiFunction PsiFunction::identity() {
    PsiFunction p;
    p.family_ = PsiFamily::identity;
    p.name_ = "identity";
    return p;
}

PsiFunction PsiFunction::power(double rho) {
    if (!(rho > 0.0)) throw std::domain_error("psi power family requires rho > 0");
    PsiFunction p;
    p.family_ = PsiFamily::power;
    p.rho_ = rho;
    p.name_ = "power";
    return p;
}

PsiFunction PsiFunction::logarithm() {
    PsiFunction p;
    p.family_ = PsiFamily::logarithm;
    p.name_ = "logarithm";
    return p;
}

PsiFunction PsiFunction::exponential(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("psi exponential family requires sigma > 0");
    PsiFunction p;
    p.family_ = PsiFamily::exponential;
    p.sigma_ = sigma;
    p.name_ = "exponential";
    return p;
}

PsiFunction PsiFunction::custom(std::function<double(double)> eval,
                                std::function<double(double)> deriv,
                                std::string name) {
    PsiFunction p;
    p.family_ = PsiFamily::custom;
    p.custom_eval_ = std::move(eval);
    p.custom_deriv_ = std::move(deriv);
    p.name_ = std::move(name);
    return p;
}

double PsiFunction::eval(double t) const {
    switch (family_) {
        case PsiFamily::identity: return t;
        case PsiFamily::power: return std::pow(t, rho_);
        case PsiFamily::logarithm: return std::log(t);
        case PsiFamily::exponential: return std::exp(sigma_ * t);
        case PsiFamily::custom: return custom_eval_(t);
    }
    return t;
}

double PsiFunction::deriv(double t) const {
    switch (family_) {
        case PsiFamily::identity: return 1.0;
        case PsiFamily::power: return rho_ * std::pow(t, rho_ - 1.0);
        case PsiFamily::logarithm: return 1.0 / t;
        case PsiFamily::exponential: return sigma_ * std::exp(sigma_ * t);
        case PsiFamily::custom: return custom_deriv_(t);
    }
    return 1.0;
}

void PsiFunction::validate_interval(double a, double b) const {
    if (!(b > a)) throw std::domain_error("psi validation requires b > a");
    if (family_ == PsiFamily::logarithm && !(a > 0.0))
        throw std::domain_error("psi logarithm family requires a > 0");
    if (family_ == PsiFamily::power && a < 0.0)
        throw std::domain_error("psi power family requires a >= 0");
    const int samples = 17;
    for (int i = 0; i <= samples; ++i) {
        const double t = a + (b - a) * i / samples;
        if (family_ == PsiFamily::power && t == 0.0 && rho_ < 1.0) continue;
        if (!(deriv(t) > 0.0)) {
            std::ostringstream os;
            os << "psi '" << name_ << "' has nonpositive derivative at t=" << t;
            throw std::domain_error(os.str());
        }
    }
}

double volterra_kernel(const PsiFunction& psi, double alpha, double t, double s) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("volterra_kernel requires alpha in (0,1]");
    if (!(s < t))
        throw std::domain_error("volterra_kernel requires s < t");
    return psi.deriv(s) * std::pow(psi.eval(t) - psi.eval(s), alpha - 1.0);
}

double psi_gamma_weight(const PsiFunction& psi, double gamma, double t, double a) {
    if (!(t > a))
        throw std::domain_error("psi_gamma_weight requires t > a");
    return std::pow(psi.eval(t) - psi.eval(a), gamma - 1.0) / std::tgamma(gamma);
}

}  // namespace psifrac
