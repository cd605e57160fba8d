// Benchmark: serial reference kernels against the OpenMP production kernels.
// Work items are the hot loops of the artifact: weight-table construction,
// table application, a Picard sweep and the series bound.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "psifrac/gronwall.hpp"
#include "psifrac/quadrature.hpp"
#include "psifrac/reference.hpp"
#include "psifrac/solver.hpp"

using namespace psifrac;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_seconds();
        fn();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %8.4f s   openmp %8.4f s   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 2048;
    int reps = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--n") n = std::stoul(argv[i + 1]);
        if (flag == "--reps") reps = std::stoi(argv[i + 1]);
    }
#if defined(_OPENMP)
    std::printf("openmp threads: %d, n = %zu\n", omp_get_max_threads(), n);
#else
    std::printf("openmp not enabled, n = %zu\n", n);
#endif

    const Grid grid = Grid::graded(0.0, 1.0, n, 2.0);
    const PsiFunction psi = PsiFunction::identity();
    const double mu = 0.5;

    double sink = 0.0;

    const double t_table_serial = time_best_of(reps, [&] {
        std::vector<double> w = ref::build_weight_table(grid, psi, mu);
        sink += w.back();
    });
    const double t_table_omp = time_best_of(reps, [&] {
        ConvolutionWeights w(grid, psi, mu);
        sink += w.row(n).back();
    });
    report("weight table", t_table_serial, t_table_omp);

    ConvolutionWeights table(grid, psi, mu);
    std::vector<double> ref_table = ref::build_weight_table(grid, psi, mu);
    std::vector<double> x(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) x[j] = std::cos(grid.node(j));

    const double t_apply_serial = time_best_of(reps, [&] {
        for (int k = 0; k < 16; ++k)
            sink += ref::apply_weight_table(ref_table, x, grid.size()).back();
    });
    const double t_apply_omp = time_best_of(reps, [&] {
        for (int k = 0; k < 16; ++k) sink += table.apply(x).back();
    });
    report("table apply x16", t_apply_serial, t_apply_omp);

    // Picard sweep: the inner-integral row sweep dominates a solve.
    IntegralProblem problem;
    problem.alpha = mu;
    problem.f = [](double, std::span<const double> xv, std::span<const double> zv,
                   std::span<double> out) { out[0] = 1.0 + 0.4 * xv[0] + 0.4 * zv[0]; };
    problem.k = [](double, double, std::span<const double> xv, std::span<double> out) {
        out[0] = 0.5 * std::sin(xv[0]);
    };
    problem.lipschitz = {0.4, 0.5};
    Trace state(grid, 1, 1.0);
    const double t_sweep_omp = time_best_of(reps, [&] {
        for (int k = 0; k < 4; ++k) sink += apply_T(problem, table, state).at(n);
    });
    // Serial sweep: same row arithmetic, plain loop over the reference table.
    const double t_sweep_serial = time_best_of(reps, [&] {
        for (int k = 0; k < 4; ++k) {
            const double inv_gamma = 1.0 / std::tgamma(mu);
            std::vector<double> out(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double* row = ref_table.data() + i * (i + 1) / 2;
                double acc = 0.0;
                double kv;
                for (std::size_t j = 0; j <= i; ++j) {
                    kv = 0.5 * std::sin(state.at(j));
                    acc += row[j] * kv;
                }
                out[i] = 1.0 + 0.4 * state.at(i) + 0.4 * inv_gamma * acc;
            }
            sink += out[n];
        }
    });
    report("picard sweep x4", t_sweep_serial, t_sweep_omp);

    // Series bound at a smaller size (it is O(k n^2) with fresh rows per k).
    const std::size_t ns = n / 4;
    const Grid sgrid = Grid::graded(0.0, 1.0, ns, 2.0);
    GronwallData data{sgrid,
                      psi,
                      0.5,
                      std::vector<double>(sgrid.size(), 1.0),
                      std::vector<double>(sgrid.size(), 1.0),
                      {},
                      {},
                      TriangularKernel::constant(sgrid, 1.0)};
    const double t_series_omp =
        time_best_of(reps, [&] { sink += series_bound(data, 24).values.back(); });
    const double t_series_serial = time_best_of(reps, [&] {
        // Plain serial evaluation of the same truncated series.
        std::vector<double> u(sgrid.size());
        for (std::size_t j = 0; j < sgrid.size(); ++j) u[j] = sgrid.node(j);
        std::vector<double> acc(data.v);
        const double lg = std::lgamma(0.5);
        for (int k = 1; k <= 24; ++k) {
            const double m = 0.5 * k;
            for (std::size_t i = 1; i < sgrid.size(); ++i) {
                std::vector<double> row(i + 1);
                quad_detail::fill_row(u, i, m, row.data());
                double quad = 0.0;
                for (std::size_t j = 0; j <= i; ++j) quad += row[j] * data.v[j];
                acc[i] += std::exp(k * std::log(data.g[i]) + k * lg - std::lgamma(m)) * quad;
            }
        }
        sink += acc.back();
    });
    report("series bound k24", t_series_serial, t_series_omp);

    // Keeps the optimizer from dropping the timed work.
    std::printf("checksum %g\n", sink);
    return 0;
}
