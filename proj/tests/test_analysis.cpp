#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "psifrac/analysis.hpp"
#include "psifrac/mittag_leffler.hpp"

using namespace psifrac;

namespace {

IntegralProblem small_problem(double alpha, double m, double kl, double g0 = 1.0) {
    IntegralProblem p;
    p.alpha = alpha;
    p.f = [m, g0](double, std::span<const double> x, std::span<const double> z,
                  std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = m * std::sin(x[i]) + m * z[i] + g0;
    };
    p.k = [kl](double, double, std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = kl * x[i];
    };
    p.lipschitz = {m, kl};
    p.name = "analysis-test";
    return p;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("integral a-priori curve closed forms") {
    const Grid grid = Grid::uniform(0.0, 1.0, 50);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 1.0);
    in.C1 = 1.0;

    in.N_const = 0.0;
    BoundCurve flat = apriori_bound_integral(in, PsiFunction::identity(), 0.5, grid);
    for (double v : flat.values) CHECK(v == doctest::Approx(1.0));

    in.N_const = 0.5;
    BoundCurve curve = apriori_bound_integral(in, PsiFunction::identity(), 0.5, grid);
    CHECK(curve.values[50] ==
          doctest::Approx(2.0 * oracles::ml(0.5, 1.0)).epsilon(1e-10));

    BoundCurve exp_curve = apriori_bound_integral(in, PsiFunction::identity(), 1.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(exp_curve.values[i] ==
              doctest::Approx(2.0 * std::exp(grid.node(i))).epsilon(1e-10));

    in.N_const = 1.0;
    CHECK_THROWS_AS(apriori_bound_integral(in, PsiFunction::identity(), 0.5, grid),
                    std::domain_error);
}

TEST_CASE("ivp a-priori curve delegates to the nested bound") {
    const Grid grid = Grid::uniform(0.0, 1.0, 40);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 0.7);
    in.p.assign(grid.size(), 0.4);
    in.C2 = 1.9;
    BoundCurve a = apriori_bound_ivp(in, PsiFunction::identity(), 0.5, grid);
    GronwallData d{grid, PsiFunction::identity(), 0.5, {}, {}, in.p,
                   std::vector<double>(grid.size(), in.C2), in.r};
    BoundCurve b = nested_ml_bound(d);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a.values[i] == b.values[i]);

    in.p.assign(grid.size(), 0.0);
    BoundCurve flat = apriori_bound_ivp(in, PsiFunction::identity(), 0.5, grid);
    for (double v : flat.values) CHECK(v == doctest::Approx(1.9));
}

TEST_CASE("dependence curves scale linearly in epsilon") {
    const Grid grid = Grid::uniform(0.0, 1.0, 30);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 1.0);
    in.N_const = 0.25;
    in.eps1 = 0.0;
    BoundCurve zero = dependence_bound_integral(in, PsiFunction::identity(), 0.5, grid);
    for (double v : zero.values) CHECK(v == 0.0);

    in.eps1 = 0.1;
    BoundCurve one = dependence_bound_integral(in, PsiFunction::identity(), 0.5, grid);
    in.eps1 = 0.2;
    BoundCurve two = dependence_bound_integral(in, PsiFunction::identity(), 0.5, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(two.values[i] == doctest::Approx(2.0 * one.values[i]).epsilon(1e-13));
    CHECK(one.values[30] ==
          doctest::Approx(0.1 / 0.75 * oracles::ml(0.5, 1.0 / 3.0)).epsilon(1e-10));

    // ivp form: eps2 = 0 -> 0; p = 0 -> eps2.
    EstimateInputs ivp_in(grid);
    ivp_in.r = TriangularKernel::constant(grid, 0.5);
    ivp_in.p.assign(grid.size(), 0.0);
    ivp_in.eps2 = 0.05;
    BoundCurve flat = dependence_bound_ivp(ivp_in, PsiFunction::identity(), 0.5, grid);
    for (double v : flat.values) CHECK(v == doctest::Approx(0.05));
}

TEST_CASE("parameter dependence curves") {
    const Grid grid = Grid::uniform(0.0, 1.0, 25);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 1.0);
    in.N_bar = 0.0;
    in.Q = 0.7;
    in.mu = 0.1;
    in.mu0 = 0.1;
    BoundCurve zero = parameter_dependence_integral(in, PsiFunction::identity(), 0.5, grid);
    for (double v : zero.values) CHECK(v == 0.0);

    in.mu = 0.3;
    BoundCurve flat = parameter_dependence_integral(in, PsiFunction::identity(), 0.5, grid);
    for (double v : flat.values)
        CHECK(v == doctest::Approx(0.7 * 0.2).epsilon(1e-13));

    in.N_bar = 0.5;
    BoundCurve exp_curve = parameter_dependence_integral(in, PsiFunction::identity(), 1.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(exp_curve.values[i] ==
              doctest::Approx(0.7 * 0.2 / 0.5 * std::exp(grid.node(i))).epsilon(1e-10));
}

TEST_CASE("curves are nondecreasing for nondecreasing data") {
    const Grid grid = Grid::graded(0.0, 1.5, 64, 2.0);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 0.8);
    in.N_const = 0.4;
    in.C1 = 1.2;
    in.C2 = 1.1;
    in.p.assign(grid.size(), 0.3);
    const BoundCurve curves[] = {
        apriori_bound_integral(in, PsiFunction::identity(), 0.6, grid),
        apriori_bound_ivp(in, PsiFunction::identity(), 0.6, grid)};
    for (const auto& c : curves)
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            CHECK(c.values[i] <= c.values[i + 1] * (1.0 + 1e-12));
}

TEST_CASE("ivp dependence curve vanishes with the perturbation") {
    const Grid grid = Grid::uniform(0.0, 1.0, 16);
    EstimateInputs in(grid);
    in.r = TriangularKernel::constant(grid, 0.5);
    in.p.assign(grid.size(), 0.4);
    in.eps2 = 0.0;
    BoundCurve zero = dependence_bound_ivp(in, PsiFunction::identity(), 0.5, grid);
    for (double v : zero.values) CHECK(v == 0.0);
}

TEST_CASE("bound checks") {
    const Grid grid = Grid::uniform(0.0, 1.0, 20);
    BoundCurve bound{grid, std::vector<double>(grid.size(), 1.0), "test", false, 0.0, 0};

    Trace zero(grid, 1);
    BoundCheckReport r0 = check_bound(zero, bound);
    CHECK(r0.holds);
    CHECK(r0.worst_margin == 0.0);

    Trace exact(grid, 1, 1.0);
    BoundCheckReport r1 = check_bound(exact, bound);
    CHECK(r1.holds);
    CHECK(r1.worst_margin == doctest::Approx(1.0));

    Trace above(grid, 1, 1.0);
    above.at(7) = 1.0 + 1e-6;
    BoundCheckReport r2 = check_bound(above, bound);
    CHECK_FALSE(r2.holds);
    CHECK(r2.worst_node == doctest::Approx(grid.node(7)));

    const Grid other = Grid::uniform(0.0, 1.0, 21);
    Trace wrong(other, 1);
    CHECK_THROWS_AS(check_bound(wrong, bound), std::domain_error);
}

TEST_CASE("hypothesis constants from problem metadata") {
    const Grid grid = Grid::graded(0.0, 1.0, 256, 2.0);
    IntegralProblem p = small_problem(0.5, 0.3, 0.4);
    EstimateInputs in = estimate_inputs(p, grid);
    CHECK(in.N_const == doctest::Approx(0.3));
    // k(t,s,0) = 0, so C1 = sup |f(t,0,0)| = g0 = 1.
    CHECK(in.C1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(in.r.diag(10) == doctest::Approx(0.4));
    CHECK(in.p[5] == doctest::Approx(0.3));
}

TEST_CASE("integrated parameter bound and the discrepancy flag") {
    const Grid grid = Grid::graded(0.0, 1.0, 512, 2.0);
    EstimateInputs in(grid);
    in.Q = 0.7;
    std::vector<double> q(grid.size(), 0.7);
    compute_Q_bar(q, PsiFunction::identity(), 0.5, grid, in);
    // I^{1/2} of a constant peaks at b = 1: 0.7 / Gamma(1.5).
    CHECK(in.Q_bar == doctest::Approx(0.7 / oracles::gamma(1.5)).epsilon(1e-10));
    CHECK(in.Q_bar_node == grid.size() - 1);
    CHECK(in.q_discrepancy);
}

TEST_CASE("end-to-end a-priori enclosure for a contractive problem") {
    const Grid grid = Grid::graded(0.0, 1.0, 512, 2.0);
    IntegralProblem p = small_problem(0.5, 0.3, 0.4);
    Trace sol = picard_solve_integral(p, grid, {});
    CHECK(sol.converged);
    EstimateInputs in = estimate_inputs(p, grid);
    BoundCurve bound = apriori_bound_integral(in, p.psi, p.alpha, grid);
    BoundCheckReport rep = check_bound(sol, bound);
    CHECK(rep.holds);
    CHECK(rep.worst_margin <= 1.0);
}

TEST_CASE("end-to-end perturbation experiment against the dependence curve") {
    const Grid grid = Grid::graded(0.0, 1.0, 512, 2.0);
    const double eps = 1e-2;
    IntegralProblem p = small_problem(0.5, 0.3, 0.4);
    IntegralProblem pert = p;
    pert.f = [eps](double t, std::span<const double> x, std::span<const double> z,
                   std::span<double> out) {
        out[0] = 0.3 * std::sin(x[0]) + 0.3 * z[0] + 1.0 + eps * std::cos(t);
    };
    Trace x = picard_solve_integral(p, grid, {});
    Trace y = picard_solve_integral(pert, grid, {});
    EstimateInputs in = estimate_inputs(p, grid);
    in.eps1 = eps;
    BoundCurve bound = dependence_bound_integral(in, p.psi, p.alpha, grid);
    BoundCheckReport rep = check_bound_difference(x, y, bound);
    CHECK(rep.holds);
    CHECK(rep.worst_margin <= 1.0);
}

}  // TEST_SUITE
