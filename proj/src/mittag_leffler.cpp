#include "psifrac/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace psifrac {

namespace {

constexpr int kTermCap = 10000;
constexpr double kLogDblMax = 709.0;  // exp() overflows just above this

[[noreturn]] void throw_domain(double alpha, double z, const char* why) {
    std::ostringstream os;
    os << "ml_eval(alpha=" << alpha << ", z=" << z << "): " << why;
    throw std::domain_error(os.str());
}

[[noreturn]] void throw_overflow(double alpha, double z) {
    std::ostringstream os;
    os << "ml_eval(alpha=" << alpha << ", z=" << z << "): value exceeds double range";
    throw std::overflow_error(os.str());
}

}  // namespace

namespace ml_detail {

double rgamma(double x) {
    // Poles of Gamma at 0, -1, -2, ...
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 0.5) {
        if (x > 171.0) return std::exp(-std::lgamma(x));
        return 1.0 / std::tgamma(x);
    }
    // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
    const double s = std::sin(M_PI * x);
    const double lg = std::lgamma(1.0 - x);
    if (lg > kLogDblMax) return std::copysign(std::numeric_limits<double>::infinity(), s);
    return std::tgamma(1.0 - x) * s / M_PI;
}

MlResult series(double alpha, double z) {
    MlResult r;
    if (z == 0.0) {
        r.value = 1.0;
        return r;
    }
    // Neumaier compensated summation; terms computed in log space to
    // survive the large-k regime without intermediate overflow.
    const double ln_abs_z = std::log(std::fabs(z));
    double sum = 1.0;  // k = 0 term
    double comp = 0.0;
    double prev_abs = 1.0;
    bool past_peak = false;
    int k = 1;
    for (; k <= kTermCap; ++k) {
        const double lt = k * ln_abs_z - std::lgamma(alpha * k + 1.0);
        if (lt > kLogDblMax) {
            if (z > 0.0) throw_overflow(alpha, z);
            // Alternating series with overflowing terms cannot be summed.
            r.converged = false;
            break;
        }
        double term = std::exp(lt);
        if (z < 0.0 && (k & 1)) term = -term;
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        const double abs_term = std::fabs(term);
        if (abs_term < prev_abs) past_peak = true;
        // Stagnation: past the peak and below one ulp of the running sum.
        if (past_peak && abs_term < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            break;
        prev_abs = abs_term;
    }
    if (k > kTermCap) r.converged = false;
    r.terms = std::min(k, kTermCap);
    r.value = sum + comp;
    if (std::isinf(r.value)) throw_overflow(alpha, z);
    return r;
}

double z_switch(double alpha) {
    // Switch once the exponent z^{1/alpha} reaches 40: the asymptotic
    // branch's omitted remainder is below exp(-40) relative there, and the
    // series needs only ~(40 + sqrt(72*40))/alpha terms up to that point.
    return std::pow(40.0, alpha);
}

double asymptotic(double alpha, double z) {
    const double w = std::pow(z, 1.0 / alpha);
    if (w > kLogDblMax) throw_overflow(alpha, z);
    double value = std::exp(w) / alpha;
    // Algebraic corrections - sum_j z^{-j}/Gamma(1 - alpha j): an asymptotic
    // series with growing Gamma factors, truncated at its smallest term.
    const double ln_z = std::log(z);
    double best = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 60; ++j) {
        const double rg = rgamma(1.0 - alpha * j);
        if (rg == 0.0) continue;  // pole: the term vanishes
        const double mag = std::exp(-j * ln_z) * std::fabs(rg);
        if (mag > best) break;  // smallest-term truncation
        best = mag;
        value -= std::exp(-j * ln_z) * rg;
        if (mag < std::fabs(value) * 1e-18) break;
    }
    return value;
}

}  // namespace ml_detail

MlResult ml_eval_detail(double alpha, double z) {
    using namespace ml_detail;
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw_domain(alpha, z, "alpha must be positive");
    if (alpha > 2.0)
        throw_domain(alpha, z, "orders above 2 are not supported");
    if (!std::isfinite(z))
        throw_domain(alpha, z, "z must be finite");

    if (z == 0.0) return {1.0, false, true, 0};

    if (alpha == 1.0) {
        // Exact reduction E_1 = exp; keeps the classical-limit identities tight.
        if (z > kLogDblMax) throw_overflow(alpha, z);
        return {std::exp(z), false, true, 0};
    }

    if (alpha > 1.0) {
        if (z > 0.0) {
            // Duplication: E_a(z) = (E_{a/2}(sqrt z) + E_{a/2}(-sqrt z)) / 2.
            const double s = std::sqrt(z);
            MlResult plus = ml_eval_detail(alpha / 2.0, s);
            MlResult minus = ml_eval_detail(alpha / 2.0, -s);
            MlResult r;
            r.value = 0.5 * (plus.value + minus.value);
            r.degraded = plus.degraded || minus.degraded;
            r.converged = plus.converged && minus.converged;
            r.terms = plus.terms + minus.terms;
            if (std::isinf(r.value)) throw_overflow(alpha, z);
            return r;
        }
        MlResult r = series(alpha, z);
        r.degraded = z < -10.0;
        return r;
    }

    // 0 < alpha < 1
    if (z > 0.0 && z > z_switch(alpha)) {
        MlResult r;
        r.value = asymptotic(alpha, z);
        return r;
    }
    MlResult r = series(alpha, z);
    if (z < -10.0) r.degraded = true;
    return r;
}

double ml_eval(double alpha, double z) {
    return ml_eval_detail(alpha, z).value;
}

}  // namespace psifrac
