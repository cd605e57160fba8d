#pragma once

namespace psifrac {

struct MlResult {
    double value = 0.0;
    bool degraded = false;   // argument outside the accuracy-supported range (z < -10)
    bool converged = true;   // series reached stagnation before the term cap
    int terms = 0;           // series terms consumed (0 for non-series branches)
};

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).
///
/// Supported orders: 0 < alpha <= 2. Hybrid evaluator: Taylor series with
/// compensated summation below a switch point, exponential-plus-algebraic
/// asymptotic form above it, and the duplication identity
/// E_alpha(z) = (E_{alpha/2}(sqrt z) + E_{alpha/2}(-sqrt z)) / 2 for alpha > 1.
/// Relative error <= 1e-10 for z >= 0 wherever the value is representable.
///
/// Throws std::domain_error for alpha outside (0,2] or non-finite z, and
/// std::overflow_error when the value exceeds double range.
double ml_eval(double alpha, double z);

/// Same evaluation with diagnostics; never hides an overflow behind a flag.
MlResult ml_eval_detail(double alpha, double z);

namespace ml_detail {

/// Series branch (compensated summation, term cap 10000 with stagnation stop).
MlResult series(double alpha, double z);

/// Asymptotic branch for large positive z, 0 < alpha <= 1:
/// (1/alpha) exp(z^{1/alpha}) - sum_j z^{-j} / Gamma(1 - alpha j),
/// truncated at the smallest term.
double asymptotic(double alpha, double z);

/// Switch point between the two branches (positive z, 0 < alpha <= 1).
double z_switch(double alpha);

/// Reciprocal gamma 1/Gamma(x), finite for all real x (zero at the poles).
double rgamma(double x);

}  // namespace ml_detail

}  // namespace psifrac
