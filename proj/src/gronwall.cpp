#include "psifrac/gronwall.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psifrac/mittag_leffler.hpp"
#include "psifrac/quadrature.hpp"

namespace psifrac {

TriangularKernel::TriangularKernel(Grid grid)
    : grid_(std::move(grid)), v_(grid_.size() * (grid_.size() + 1) / 2, 0.0) {}

TriangularKernel TriangularKernel::constant(Grid grid, double value) {
    TriangularKernel k(std::move(grid));
    std::fill(k.v_.begin(), k.v_.end(), value);
    return k;
}

TriangularKernel TriangularKernel::from_callable(
    Grid grid, const std::function<double(double, double)>& fn) {
    TriangularKernel k(std::move(grid));
    for (std::size_t i = 0; i < k.grid_.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            k.at(i, j) = fn(k.grid_.node(i), k.grid_.node(j));
    return k;
}

double TriangularKernel::interpolate(double t, double sigma) const {
    const auto nodes = grid_.nodes();
    const std::size_t n = nodes.size();
    auto locate = [&](double x) {
        std::size_t lo = 0;
        while (lo + 2 < n && nodes[lo + 1] <= x) ++lo;
        return lo;
    };
    t = std::clamp(t, grid_.a(), grid_.b());
    sigma = std::clamp(sigma, grid_.a(), t);
    const std::size_t i = locate(t);
    std::size_t j = locate(sigma);
    if (j > i) j = i;
    const double ft = (nodes[i + 1] > nodes[i]) ? (t - nodes[i]) / (nodes[i + 1] - nodes[i]) : 0.0;
    const double fs =
        (nodes[j + 1] > nodes[j]) ? (sigma - nodes[j]) / (nodes[j + 1] - nodes[j]) : 0.0;
    auto cell = [&](std::size_t ii, std::size_t jj) { return at(ii, std::min(jj, ii)); };
    const double a00 = cell(i, j), a01 = cell(i, j + 1);
    const double a10 = cell(i + 1, j), a11 = cell(i + 1, j + 1);
    return (1 - ft) * ((1 - fs) * a00 + fs * a01) + ft * ((1 - fs) * a10 + fs * a11);
}

void GronwallData::validate() const {
    // alpha = 1 is admitted so the classical exponential reductions can be
    // evaluated through the same code path.
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::domain_error("GronwallData: alpha must be in (0,1]");
    const std::size_t n = grid.size();
    auto check_nonneg = [&](const std::vector<double>& f, const char* name) {
        if (f.empty()) return;
        if (f.size() != n) throw std::domain_error(std::string("GronwallData: ") + name +
                                                   " sample count does not match the grid");
        for (double x : f)
            if (!(x >= 0.0))
                throw std::domain_error(std::string("GronwallData: ") + name +
                                        " must be nonnegative");
    };
    auto check_nondecreasing = [&](const std::vector<double>& f, const char* name) {
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i + 1] < f[i] - 1e-12 * std::fabs(f[i]))
                throw std::domain_error(std::string("GronwallData: ") + name +
                                        " must be nondecreasing");
    };
    check_nonneg(v, "v");
    check_nonneg(g, "g");
    check_nonneg(p, "p");
    check_nonneg(g_tilde, "g_tilde");
    check_nondecreasing(g, "g");
    check_nondecreasing(g_tilde, "g_tilde");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(r.at(i, j) >= 0.0))
                throw std::domain_error("GronwallData: r must be nonnegative");
}

namespace {

std::vector<double> psi_offsets(const Grid& grid, const PsiFunction& psi) {
    std::vector<double> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) u[j] = psi.eval(grid.node(j));
    return u;
}

void require_nondecreasing(const std::vector<double>& f, const char* name) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i + 1] < f[i] - 1e-12 * std::fabs(f[i]))
            throw std::domain_error(std::string("bound hypothesis violated: ") + name +
                                    " must be nondecreasing");
}

}  // namespace

BoundCurve series_bound(const GronwallData& data, int k_max) {
    if (k_max < 1) throw std::domain_error("series_bound: k_max must be >= 1");
    data.validate();
    if (data.v.size() != data.grid.size() || data.g.size() != data.grid.size())
        throw std::domain_error("series_bound: v and g are required");

    const std::size_t n = data.grid.size();
    const std::vector<double> u = psi_offsets(data.grid, data.psi);
    const double lg_alpha = std::lgamma(data.alpha);

    BoundCurve out{data.grid, data.v, "lemma4-series", false, 0.0, 0};
    std::vector<double> term(n, 0.0);
    double running_max = *std::max_element(data.v.begin(), data.v.end());
    for (int k = 1; k <= k_max; ++k) {
        const double mu = data.alpha * k;
        const double log_coef_gamma = k * lg_alpha - std::lgamma(mu);
        const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
        {
            std::vector<double> row(n);
#pragma omp for schedule(dynamic, 16)
            for (std::ptrdiff_t ip = 0; ip < ni; ++ip) {
                const std::size_t i = static_cast<std::size_t>(ip);
                if (i == 0 || data.g[i] == 0.0) {
                    term[i] = 0.0;
                    continue;
                }
                quad_detail::fill_row(u, i, mu, row.data());
                double quad = 0.0;
                for (std::size_t j = 0; j <= i; ++j)
                    quad += row[j] * data.r.at(i, j) * data.v[j];
                const double coef = std::exp(k * std::log(data.g[i]) + log_coef_gamma);
                term[i] = coef * quad;
            }
        }
        double term_max = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            out.values[i] += term[i];
            term_max = std::max(term_max, term[i]);
        }
        out.terms_used = k;
        out.last_term_max = term_max;
        running_max = std::max(running_max, *std::max_element(out.values.begin(), out.values.end()));
        if (term_max < 1e-14 * running_max) break;
    }
    return out;
}

BoundCurve ml_bound(const GronwallData& data) {
    data.validate();
    if (data.v.size() != data.grid.size() || data.g.size() != data.grid.size())
        throw std::domain_error("ml_bound: v and g are required");
    std::vector<double> rdiag(data.grid.size());
    for (std::size_t i = 0; i < data.grid.size(); ++i) rdiag[i] = data.r.diag(i);
    require_nondecreasing(rdiag, "r(t,t)");
    require_nondecreasing(data.v, "v");

    const std::vector<double> u = psi_offsets(data.grid, data.psi);
    const double gam = std::tgamma(data.alpha);
    BoundCurve out{data.grid, std::vector<double>(data.grid.size()), "corollary1-ml",
                   false, 0.0, 0};
    for (std::size_t i = 0; i < data.grid.size(); ++i) {
        const double w = std::pow(u[i] - u[0], data.alpha);
        out.values[i] = data.v[i] * ml_eval(data.alpha, data.g[i] * rdiag[i] * gam * w);
    }
    return out;
}

BoundCurve nested_ml_bound(const GronwallData& data) {
    data.validate();
    if (data.p.size() != data.grid.size() || data.g_tilde.size() != data.grid.size())
        throw std::domain_error("nested_ml_bound: p and g_tilde are required");

    const std::vector<double> u = psi_offsets(data.grid, data.psi);
    const double gam = std::tgamma(data.alpha);
    BoundCurve out{data.grid, std::vector<double>(data.grid.size()), "lemma5-nested",
                   false, 0.0, 0};
    for (std::size_t i = 0; i < data.grid.size(); ++i) {
        const double w = std::pow(u[i] - u[0], data.alpha);
        const double inner = ml_eval(data.alpha, data.r.diag(i) * gam * w);
        out.values[i] = data.g_tilde[i] * ml_eval(data.alpha, data.p[i] * gam * inner * w);
    }
    return out;
}

namespace {

/// Nondecreasing piecewise-linear samples: base plus randomized cumulative
/// ramps over a handful of breakpoints.
std::vector<double> ramp_samples(const Grid& grid, std::mt19937_64& rng, double base,
                                 double total_rise) {
    std::uniform_real_distribution<double> un(0.0, 1.0);
    const int breaks = 4;
    std::vector<double> knots(breaks + 1);
    knots[0] = base;
    std::vector<double> inc(breaks);
    double sum = 0.0;
    for (int k = 0; k < breaks; ++k) sum += (inc[k] = 0.1 + un(rng));
    for (int k = 0; k < breaks; ++k) knots[k + 1] = knots[k] + total_rise * inc[k] / sum;
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = (grid.node(i) - grid.a()) / (grid.b() - grid.a()) * breaks;
        const int k = std::min(breaks - 1, static_cast<int>(s));
        out[i] = knots[k] + (s - k) * (knots[k + 1] - knots[k]);
    }
    return out;
}

}  // namespace

GronwallData random_hypothesis_data(const Grid& grid, std::mt19937_64& rng,
                                    GronwallMode mode) {
    std::uniform_real_distribution<double> un(0.0, 1.0);
    if (mode == GronwallMode::lemma4) {
        const double alpha = 0.35 + 0.55 * un(rng);
        std::vector<double> rt = ramp_samples(grid, rng, 0.2, 0.6);
        std::vector<double> rs = ramp_samples(grid, rng, 0.1, 0.5);
        TriangularKernel r(grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) r.at(i, j) = rt[i] + rs[j];
        return GronwallData{grid,
                            PsiFunction::identity(),
                            alpha,
                            ramp_samples(grid, rng, 0.4, 0.8),
                            ramp_samples(grid, rng, 0.1, 0.6),
                            {},
                            {},
                            r};
    }
    const double alpha = 0.5 + 0.4 * un(rng);
    return GronwallData{grid,
                        PsiFunction::identity(),
                        alpha,
                        {},
                        {},
                        ramp_samples(grid, rng, 0.1, 0.4),
                        ramp_samples(grid, rng, 0.5, 1.0),
                        TriangularKernel::constant(grid, 0.2 + 0.3 * un(rng))};
}

Trace extremal_solve(const GronwallData& data, GronwallMode mode) {
    data.validate();
    const std::size_t n = data.grid.size();
    ConvolutionWeights W(data.grid, data.psi, data.alpha);
    Trace out(data.grid, 1);

    if (mode == GronwallMode::lemma4) {
        if (data.v.size() != n || data.g.size() != n)
            throw std::domain_error("extremal_solve: v and g are required for lemma4 mode");
        out.at(0) = data.v[0];
        for (std::size_t i = 1; i < n; ++i) {
            const auto row = W.row(i);
            double acc = 0.0;
            for (std::size_t j = 0; j < i; ++j)
                acc += row[j] * data.r.at(i, j) * out.at(j);
            const double diag = data.g[i] * row[i] * data.r.at(i, i);
            if (diag >= 1.0)
                throw std::runtime_error(
                    "extremal_solve: grid too coarse, diagonal weight reached 1");
            out.at(i) = (data.v[i] + data.g[i] * acc) / (1.0 - diag);
        }
        return out;
    }

    // lemma5: u*(t) = g~(t) + int N(t,tau) p(tau) [u*(tau) + inner(tau)] dtau
    // with inner(tau) = int_a^tau N(tau,sigma) r(tau,sigma) u*(sigma) dsigma.
    if (data.p.size() != n || data.g_tilde.size() != n)
        throw std::domain_error("extremal_solve: p and g_tilde are required for lemma5 mode");
    std::vector<double> inner(n, 0.0);
    out.at(0) = data.g_tilde[0];
    for (std::size_t i = 1; i < n; ++i) {
        const auto row = W.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            acc += row[j] * data.p[j] * (out.at(j) + inner[j]);
        double inner_partial = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            inner_partial += row[j] * data.r.at(i, j) * out.at(j);
        const double wd = row[i];
        const double denom = 1.0 - wd * data.p[i] * (1.0 + wd * data.r.at(i, i));
        if (denom <= 0.0)
            throw std::runtime_error(
                "extremal_solve: grid too coarse, diagonal weight reached 1");
        out.at(i) = (data.g_tilde[i] + acc + wd * data.p[i] * inner_partial) / denom;
        inner[i] = inner_partial + wd * data.r.at(i, i) * out.at(i);
    }
    return out;
}

}  // namespace psifrac
