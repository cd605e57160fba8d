#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

double gamma(double x) {
    // Lanczos, g = 7, n = 9 (Godfrey coefficients).
    static const double c[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5)
        return M_PI / (std::sin(M_PI * x) * gamma(1.0 - x));  // reflection
    x -= 1.0;
    double a = c[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double ml(double alpha, double z, int terms) {
    if (!(alpha > 0.0)) throw std::domain_error("oracle ml: alpha must be > 0");
    long double sum = 0.0L, comp = 0.0L;
    long double zp = 1.0L;  // z^k
    for (int k = 0; k < terms; ++k) {
        const long double term = zp / tgammal((long double)alpha * k + 1.0L);
        const long double t = sum + term;
        if (fabsl(sum) >= fabsl(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        zp *= (long double)z;
        if (k > 8 && fabsl(term) < 1e-25L * fabsl(sum)) break;
    }
    return static_cast<double>(sum + comp);
}

double ml_half(double z) { return std::exp(z * z) * std::erfc(-z); }

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<long double>& x, std::vector<long double>& w) {
    x.assign(n, 0.0L);
    w.assign(n, 0.0L);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double z = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
        long double pp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = 0.0L;
            for (int j = 0; j < n; ++j) {
                const long double p2 = p1;
                p1 = p0;
                p0 = ((2.0L * j + 1.0L) * z * p1 - j * p2) / (j + 1.0L);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0L);
            const long double dz = p0 / pp;
            z -= dz;
            if (fabsl(dz) < 1e-19L) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0L / ((1.0L - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

long double panel(const psifrac::PsiFunction& psi, double mu, double t, long double lo,
                  long double hi, const std::function<double(double)>& f,
                  const std::vector<long double>& gx, const std::vector<long double>& gw) {
    const long double ut = psi.eval(t);
    long double acc = 0.0L;
    const long double mid = 0.5L * (lo + hi);
    const long double hal = 0.5L * (hi - lo);
    for (std::size_t q = 0; q < gx.size(); ++q) {
        const double s = static_cast<double>(mid + hal * gx[q]);
        const long double kern =
            (long double)psi.deriv(s) *
            powl(ut - (long double)psi.eval(s), (long double)mu - 1.0L);
        acc += gw[q] * kern * (long double)f(s);
    }
    return acc * hal;
}

}  // namespace

double weak_integral(const psifrac::PsiFunction& psi, double mu, double a, double t,
                     const std::function<double(double)>& f, bool singular_at_a) {
    if (!(t > a)) return 0.0;
    static std::vector<long double> gx, gw;
    if (gx.empty()) gauss_legendre(24, gx, gw);

    const int levels = 44;
    const long double len = (long double)t - (long double)a;
    long double acc = 0.0L;

    // Left block: [a, a + len/2], refined toward a when requested.
    if (singular_at_a) {
        long double right = (long double)a + 0.5L * len;
        for (int m = 0; m < levels; ++m) {
            const long double left = (long double)a + 0.5L * len * powl(0.5L, m + 1);
            acc += panel(psi, mu, t, left, right, f, gx, gw);
            right = left;
        }
    } else {
        acc += panel(psi, mu, t, (long double)a, (long double)a + 0.5L * len, f, gx, gw);
    }

    // Right block: dyadic panels toward the kernel singularity at t.
    long double left = (long double)a + 0.5L * len;
    for (int m = 0; m < levels; ++m) {
        const long double right = (long double)t - 0.5L * len * powl(0.5L, m + 1);
        acc += panel(psi, mu, t, left, right, f, gx, gw);
        left = right;
    }
    // Analytic tail over the final gap, f frozen at its left edge.
    const long double ut = psi.eval(t);
    const long double ul = psi.eval(static_cast<double>(left));
    acc += (long double)f(static_cast<double>(left)) * powl(ut - ul, (long double)mu) /
           (long double)mu;
    return static_cast<double>(acc);
}

}  // namespace oracles
