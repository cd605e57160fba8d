#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psifrac/gronwall.hpp"
#include "psifrac/solver.hpp"

namespace psifrac::scenario {

/// Configuration error carrying the offending field path ("space.delta").
struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_path, const std::string& message)
        : std::runtime_error(field_path + ": " + message), field(std::move(field_path)) {}
};

/// Piecewise description of a nonnegative scalar profile on [a,b].
struct Profile {
    std::string kind = "const";  // const | ramp
    double value = 0.0;          // const
    double from = 0.0, to = 0.0; // ramp endpoints (in t over [a,b])

    double eval(double t, double a, double b) const;
};

struct GDescriptor {
    std::string kind = "const";  // const | power | ml_weight
    double value = 1.0;          // const
    double exponent = 2.0;       // power: (psi(t)-psi(a))^exponent
    double xi0 = 1.0;            // ml_weight: E_alpha[xi0 (psi(t)-psi(a))^alpha]
};

struct FConfig {
    std::string family = "affine";  // affine | bounded
    double lambda = 0.0;            // affine x-coefficient
    double c = 0.0;                 // z-coefficient (both families)
    double m = 0.0;                 // bounded: m sin(x)
    GDescriptor g;
};

struct KConfig {
    std::string family = "linear";  // linear | bounded
    double coef = 0.5;              // linear: coef * x; bounded: coef * sin(x)
    double L = -1.0;                // declared Lipschitz bound; < 0 means |coef|
};

struct ProblemConfig {
    std::string kind = "integral";  // integral | ivp
    std::size_t dimension = 1;
    double alpha = 0.5;
    double beta = 1.0;              // ivp only
    std::vector<double> x0;         // ivp only
    FConfig f;
    KConfig k;
    double M_override = -1.0;  // problem.lipschitz.M, optional
    double L_override = -1.0;  // problem.lipschitz.L, optional
};

struct PsiConfig {
    std::string family = "identity";
    double rho = 2.0;
    double sigma = 1.0;
};

struct ScenarioConfig {
    std::string name = "scenario";
    ProblemConfig problem;
    PsiConfig psi;
    double interval_a = 0.0;
    double interval_b = 1.0;
    std::size_t grid_n = 1024;
    double grid_grading_q = 2.0;
    double space_delta = 2.0;
    double space_xi = 0.0;  // > 0 overrides L*delta
    double solver_tol = 1e-10;
    int solver_max_iter = 200;
    std::string out_trace = "trace.csv";
    std::string out_log = "convergence.csv";
    std::string out_bounds = "bounds.csv";
    std::string out_summary = "summary.txt";
    std::string config_hash;  // FNV-1a of the canonical serialized form
};

/// Gronwall pipeline profile.
struct GronwallProfile {
    std::string mode = "lemma4";  // lemma4 | corollary1 | lemma5
    double alpha = 0.5;
    PsiConfig psi;
    double interval_a = 0.0;
    double interval_b = 1.0;
    std::size_t grid_n = 512;
    double grid_grading_q = 2.0;
    int series_k_max = 40;
    Profile v, g, p, g_tilde;
    std::string r_kind = "const";  // const | separable
    double r_value = 0.5;
    Profile r_t, r_sigma;  // separable: r(t,s) = r_t(t) + r_sigma(s)
    std::string out_csv = "gronwall.csv";
    std::string config_hash;
};

ScenarioConfig parse_scenario_file(const std::string& path);
ScenarioConfig parse_scenario_text(const std::string& text, const std::string& name);
GronwallProfile parse_gronwall_file(const std::string& path);
GronwallProfile parse_gronwall_text(const std::string& text, const std::string& name);

/// Built-in problem registry: every entry carries certifiably true Lipschitz
/// metadata for its f and k families.
std::vector<std::string> registry_names();
ScenarioConfig registry_scenario(const std::string& name);

/// File path or registry name.
ScenarioConfig load_scenario(const std::string& path_or_name);

PsiFunction make_psi(const PsiConfig& cfg);
Grid make_grid(const ScenarioConfig& cfg);
IntegralProblem make_integral_problem(const ScenarioConfig& cfg);
IvpProblem make_ivp_problem(const ScenarioConfig& cfg);

struct RunResult {
    int exit_code = 0;
    std::vector<std::string> summary;   // also written to the summary file
    std::vector<std::string> outputs;   // paths written
};

/// Solve pipeline: trace CSV, convergence log CSV, summary.
RunResult run_solve(const ScenarioConfig& cfg, const std::string& out_dir);

/// Bound pipeline for theorem 3|4|7|8|9|10; eps feeds 7/8, (mu, mu0, q0) 9/10.
RunResult run_bounds(const ScenarioConfig& cfg, int theorem, double eps, double mu,
                     double mu0, double q0, const std::string& out_dir);

/// Two-solve perturbation experiment (theorem 7 or 8 depending on the kind).
RunResult run_depend(const ScenarioConfig& cfg, double eps, const std::string& out_dir);

/// Gronwall pipeline: extremal solution against its bound curves.
RunResult run_gronwall(const GronwallProfile& profile, const std::string& out_dir);

/// verify --check lemma1|composition.
RunResult run_verify(const std::string& check, double alpha, double beta, double xi,
                     const PsiConfig& psi, double a, double b, std::size_t n,
                     double grading_q, double threshold, const std::string& out_csv,
                     const std::string& out_dir);

}  // namespace psifrac::scenario
