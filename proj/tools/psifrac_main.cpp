#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "psifrac/csv.hpp"
#include "psifrac/mittag_leffler.hpp"
#include "psifrac/scenario.hpp"

using namespace psifrac;
namespace sc = psifrac::scenario;

namespace {

// Exit codes: 0 ok, 1 check failed, 2 config/usage error, 3 divergence.
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

void print_summary(const sc::RunResult& res) {
    for (const auto& line : res.summary) std::cout << line << "\n";
}

int run_random_gronwall(const std::string& mode, int count, std::uint64_t seed,
                        std::size_t n, const std::string& out_csv,
                        const std::string& out_dir) {
    const Grid grid = Grid::graded(0.0, 1.0, n, 2.0);
    std::mt19937_64 rng(seed);
    const GronwallMode gm = mode == "lemma5" ? GronwallMode::lemma5 : GronwallMode::lemma4;
    std::string path = out_csv;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        path = (std::filesystem::path(out_dir) / out_csv).string();
    }
    csv::Writer out(path);
    out.comment("mode=" + mode + " count=" + std::to_string(count) +
                " seed=" + std::to_string(seed) + " n=" + std::to_string(n));
    out.line({"instance", "alpha", "min_margin", "holds"});
    bool all_hold = true;
    for (int inst = 0; inst < count; ++inst) {
        GronwallData data = random_hypothesis_data(grid, rng, gm);
        Trace ustar = extremal_solve(data, gm);
        BoundCurve bound = gm == GronwallMode::lemma5 ? nested_ml_bound(data) : ml_bound(data);
        double min_margin = std::numeric_limits<double>::infinity();
        bool holds = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double margin = bound.values[i] / std::max(ustar.at(i), 1e-300);
            min_margin = std::min(min_margin, margin);
            if (!(ustar.at(i) <= bound.values[i] * (1.0 + 1e-9))) holds = false;
        }
        all_hold = all_hold && holds;
        out.line({std::to_string(inst), csv::fmt(data.alpha), csv::fmt(min_margin),
                  holds ? "true" : "false"});
    }
    std::cout << "gronwall random mode=" << mode << " instances=" << count
              << " all_hold=" << (all_hold ? "true" : "false") << "\n";
    return all_hold ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"psifrac: psi-Hilfer fractional Volterra solver with certified bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir, global_config;
    std::uint64_t seed = 12345;
    app.add_option("--config", global_config, "Scenario config file (fallback for "
                                              "--problem / --profile)");
    app.add_option("--out-dir", out_dir, "Directory for output files");
    app.add_option("--seed", seed, "Seed for randomized scenarios");

    auto resolve = [&](const std::string& local, const char* flag) -> std::string {
        if (!local.empty()) return local;
        if (!global_config.empty()) return global_config;
        throw sc::ConfigError(flag, "give this flag or the global --config");
    };

    // ml-eval
    auto* ml = app.add_subcommand("ml-eval", "Evaluate the Mittag-Leffler function");
    double ml_alpha = 1.0, ml_z = 0.0;
    ml->add_option("--alpha", ml_alpha, "Order in (0,2]")->required();
    ml->add_option("--z", ml_z, "Argument")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Operator identity checks");
    std::string v_check = "lemma1", v_psi = "identity", v_out = "verify.csv";
    double v_alpha = 0.5, v_beta = 0.0, v_xi = 1.0, v_a = 0.0, v_b = 1.0, v_q = 4.0;
    double v_rho = 2.0, v_sigma = 1.0, v_threshold = -1.0;
    std::size_t v_n = 2048;
    verify->add_option("--check", v_check, "lemma1 or composition")->required();
    verify->add_option("--alpha", v_alpha, "Order");
    verify->add_option("--beta", v_beta, "Type (composition only)");
    verify->add_option("--xi", v_xi, "Weight rate (lemma1 only)");
    verify->add_option("--psi", v_psi, "identity|power|logarithm|exponential");
    verify->add_option("--rho", v_rho, "psi power exponent");
    verify->add_option("--sigma", v_sigma, "psi exponential rate");
    verify->add_option("--a", v_a, "Left endpoint");
    verify->add_option("--b", v_b, "Right endpoint");
    verify->add_option("--n", v_n, "Grid cells");
    verify->add_option("--grading-q", v_q, "Grading exponent (1 = uniform)");
    verify->add_option("--threshold", v_threshold,
                       "Pass threshold (default 1e-4 lemma1, 1e-2 composition)");
    verify->add_option("--out", v_out, "Output CSV");

    // solve
    auto* solve = app.add_subcommand("solve", "Picard-solve a problem");
    std::string s_problem;
    double s_tol = -1.0;
    int s_max_iter = -1;
    std::string s_out, s_log;
    solve->add_option("--problem", s_problem, "Config file or registry name");
    solve->add_option("--tol", s_tol, "Convergence tolerance override");
    solve->add_option("--max-iter", s_max_iter, "Iteration cap override");
    solve->add_option("--out", s_out, "Trace CSV override");
    solve->add_option("--log", s_log, "Convergence log CSV override");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "A-priori / dependence bound checks");
    std::string b_problem, b_out;
    int b_theorem = 3;
    double b_eps = 1e-2, b_mu = 0.1, b_mu0 = 0.0, b_q0 = 0.5;
    bounds->add_option("--theorem", b_theorem, "3|4|7|8|9|10")->required();
    bounds->add_option("--problem", b_problem, "Config file or registry name");
    bounds->add_option("--eps", b_eps, "Perturbation size (theorems 7/8)");
    bounds->add_option("--mu", b_mu, "Parameter value (theorems 9/10)");
    bounds->add_option("--mu0", b_mu0, "Reference parameter (theorems 9/10)");
    bounds->add_option("--q0", b_q0, "Parameter coupling constant (theorems 9/10)");
    bounds->add_option("--out", b_out, "Bounds CSV override");

    // gronwall
    auto* gron = app.add_subcommand("gronwall", "Integral-inequality bound curves");
    std::string g_mode = "lemma4", g_profile, g_out = "gronwall.csv";
    int g_random = 0;
    std::size_t g_n = 160;
    gron->add_option("--mode", g_mode, "lemma4|corollary1|lemma5")->required();
    gron->add_option("--profile", g_profile, "Profile config file");
    gron->add_option("--random", g_random, "Run this many random hypothesis instances");
    gron->add_option("--n", g_n, "Grid cells for --random");
    gron->add_option("--out", g_out, "Output CSV");

    // depend
    auto* dep = app.add_subcommand("depend", "Two-solve perturbation experiment");
    std::string d_problem, d_out;
    double d_eps = 1e-2;
    dep->add_option("--problem", d_problem, "Config file or registry name");
    dep->add_option("--perturb", d_eps, "Perturbation size")->required();
    dep->add_option("--out", d_out, "Comparison CSV override");

    // batch
    auto* batch = app.add_subcommand("batch", "Run a list of scenarios");
    std::string batch_config;
    batch->add_option("--list", batch_config, "Batch config JSON (or global --config)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ml->parsed()) {
            const double value = ml_eval(ml_alpha, ml_z);
            std::printf("%.15g\n", value);
            return 0;
        }
        if (verify->parsed()) {
            if (v_threshold <= 0.0) v_threshold = v_check == "lemma1" ? 1e-4 : 1e-2;
            sc::PsiConfig psi{v_psi, v_rho, v_sigma};
            if (v_psi == "logarithm" && v_a == 0.0) {
                v_a = 1.0;
                v_b = std::exp(1.0);
            }
            sc::RunResult res = sc::run_verify(v_check, v_alpha, v_beta, v_xi, psi, v_a, v_b,
                                               v_n, v_q, v_threshold, v_out, out_dir);
            print_summary(res);
            return res.exit_code;
        }
        if (solve->parsed()) {
            sc::ScenarioConfig cfg = sc::load_scenario(resolve(s_problem, "problem"));
            if (s_tol > 0.0) cfg.solver_tol = s_tol;
            if (s_max_iter > 0) cfg.solver_max_iter = s_max_iter;
            if (!s_out.empty()) cfg.out_trace = s_out;
            if (!s_log.empty()) cfg.out_log = s_log;
            sc::RunResult res = sc::run_solve(cfg, out_dir);
            print_summary(res);
            return res.exit_code;
        }
        if (bounds->parsed()) {
            if (b_theorem != 3 && b_theorem != 4 && b_theorem != 7 && b_theorem != 8 &&
                b_theorem != 9 && b_theorem != 10)
                throw sc::ConfigError("theorem", "must be one of 3, 4, 7, 8, 9, 10");
            sc::ScenarioConfig cfg = sc::load_scenario(resolve(b_problem, "problem"));
            if (!b_out.empty()) cfg.out_bounds = b_out;
            sc::RunResult res =
                sc::run_bounds(cfg, b_theorem, b_eps, b_mu, b_mu0, b_q0, out_dir);
            print_summary(res);
            return res.exit_code;
        }
        if (gron->parsed()) {
            if (g_random > 0)
                return run_random_gronwall(g_mode, g_random, seed, g_n, g_out, out_dir);
            sc::GronwallProfile profile =
                sc::parse_gronwall_file(resolve(g_profile, "profile"));
            profile.mode = g_mode;
            if (!g_out.empty()) profile.out_csv = g_out;
            sc::RunResult res = sc::run_gronwall(profile, out_dir);
            print_summary(res);
            return res.exit_code;
        }
        if (dep->parsed()) {
            sc::ScenarioConfig cfg = sc::load_scenario(resolve(d_problem, "problem"));
            if (!d_out.empty()) cfg.out_bounds = d_out;
            sc::RunResult res = sc::run_depend(cfg, d_eps, out_dir);
            print_summary(res);
            return res.exit_code;
        }
        if (batch->parsed()) {
            const std::string batch_path = resolve(batch_config, "config");
            std::ifstream in(batch_path, std::ios::binary);
            if (!in) throw sc::ConfigError(batch_path, "cannot open batch config");
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (j.is_discarded() || !j.contains("scenarios") || !j["scenarios"].is_array())
                throw sc::ConfigError("scenarios", "batch config needs a scenarios array");
            int worst = 0;
            int index = 0;
            for (const auto& entry : j["scenarios"]) {
                if (!entry.is_object())
                    throw sc::ConfigError("scenarios", "entries must be objects");
                const std::string pipeline = entry.value("pipeline", "solve");
                const std::string problem = entry.value("problem", "");
                const std::string sub_dir =
                    (std::filesystem::path(out_dir.empty() ? "." : out_dir) /
                     ("scenario-" + std::to_string(index)))
                        .string();
                sc::RunResult res;
                if (pipeline == "solve") {
                    res = sc::run_solve(sc::load_scenario(problem), sub_dir);
                } else if (pipeline == "bounds") {
                    res = sc::run_bounds(sc::load_scenario(problem),
                                         entry.value("theorem", 3), entry.value("eps", 1e-2),
                                         entry.value("mu", 0.1), entry.value("mu0", 0.0),
                                         entry.value("q0", 0.5), sub_dir);
                } else if (pipeline == "depend") {
                    res = sc::run_depend(sc::load_scenario(problem),
                                         entry.value("eps", 1e-2), sub_dir);
                } else {
                    throw sc::ConfigError("scenarios.pipeline",
                                          "must be solve, bounds or depend");
                }
                std::cout << "[" << index << "] " << pipeline << " " << problem
                          << " exit=" << res.exit_code << "\n";
                worst = std::max(worst, res.exit_code);
                ++index;
            }
            return worst;
        }
    } catch (const sc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivergence;
    }
    return 0;
}
