#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sincvide/benchmarks.hpp"
#include "sincvide/convergence.hpp"
#include "sincvide/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sincvide;

// Exit codes are a stable contract: 0 success, 1 usage error, 2 evaluation
// error, 3 solver failure.
enum ExitCode { kOk = 0, kUsage = 1, kEvaluation = 2, kSolverFailed = 3 };

BenchmarkCase get_case(const std::string& name, double eps) {
    constexpr std::string_view prefix = "manufactured:";
    if (name.rfind(prefix, 0) == 0) {
        const std::string tail(name.substr(prefix.size()));
        std::size_t used = 0;
        const unsigned long seed = std::stoul(tail, &used);
        if (used != tail.size()) throw std::invalid_argument("bad manufactured seed: " + tail);
        return manufactured_case(static_cast<unsigned>(seed), eps);
    }
    const std::vector<BenchmarkCase> cases = registry(eps);
    const BenchmarkCase* found = find_case(cases, name);
    if (!found) throw std::invalid_argument("unknown case '" + name + "' (see `list`)");
    return *found;
}

Method parse_method(const std::string& s) {
    if (s == "se" || s == "SE") return Method::SE;
    if (s == "de" || s == "DE") return Method::DE;
    throw std::invalid_argument("method must be se or de");
}

int cmd_list() {
    for (const BenchmarkCase& c : registry()) {
        std::printf("%-14s SE: alpha=%-5g d_sup=%-10.8g DE: alpha=%-5g d_sup=%-10.8g\n",
                    c.name.c_str(), c.se.alpha, c.se_d_sup, c.de.alpha, c.de_d_sup);
    }
    return kOk;
}

int cmd_solve(const std::string& case_name, const std::string& method_str, int truncation,
              double eps, int eval_points) {
    const BenchmarkCase bc = get_case(case_name, eps);
    const Method method = parse_method(method_str);
    const RegularityParams& params = method == Method::SE ? bc.se : bc.de;

    const SincGrid grid = build_grid(bc.problem.interval, params, truncation);
    const auto start = std::chrono::steady_clock::now();
    const SincSolution sol = solve(bc.problem, grid);
    const auto stop = std::chrono::steady_clock::now();

    json out;
    out["case"] = bc.name;
    out["method"] = method_name(method);
    out["N"] = truncation;
    out["h"] = grid.h();
    out["alpha"] = params.alpha;
    out["d_used"] = params.d;
    out["eps"] = eps;
    out["max_error"] = max_error(sol, bc.exact, eval_points);
    out["residual"] = sol.residual_inf;
    out["node_count"] = grid.size();
    out["solve_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    std::cout << out.dump(2) << "\n";
    return kOk;
}

json fit_json(const RateFit& fit, const char* abscissa) {
    if (!fit.sufficient) return json{{"status", "insufficient-data"}};
    json j;
    j["abscissa"] = abscissa;
    j["slope"] = fit.line.slope;
    j["intercept"] = fit.line.intercept;
    j["r2"] = fit.line.r2;
    j["points"] = fit.line.count;
    j["theory_slope"] = fit.theory_slope;
    return j;
}

int cmd_converge(const std::string& case_name, std::vector<int> n_list, double eps,
                 int eval_points, const std::string& out_path) {
    if (n_list.empty()) throw std::invalid_argument("empty N list");
    if (!std::is_sorted(n_list.begin(), n_list.end()) ||
        std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
        throw std::invalid_argument("N list must be strictly ascending");
    if (n_list.front() < 1) throw std::invalid_argument("N values must be >= 1");

    const BenchmarkCase bc = get_case(case_name, eps);
    const ConvergenceReport report = run_convergence(bc, n_list, eps, eval_points);

    std::ofstream file(out_path, std::ios::binary);  // binary keeps LF endings
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << to_csv(report);
    if (!file.flush()) throw std::invalid_argument("failed writing: " + out_path);

    json summary;
    summary["case"] = report.case_name;
    summary["eps"] = report.eps;
    summary["out"] = out_path;
    summary["fits"]["se"] = fit_json(report.fit_se, "sqrt(N)");
    summary["fits"]["de"] = fit_json(report.fit_de, "N/log(2dN/alpha)");
    std::cout << summary.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SE/DE Sinc-Nystrom solver for linear Volterra integro-differential equations"};
    app.require_subcommand(1);

    CLI::App* list = app.add_subcommand("list", "List the benchmark cases and their parameters");

    std::string case_name, method_str = "de", out_path;
    int truncation = 32;
    double eps = 0.05;
    int eval_points = 999;
    std::vector<int> n_list = {2, 4, 8, 16, 32, 64, 128};

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one case at one N, JSON to stdout");
    solve_cmd->add_option("--case", case_name, "case name (see `list`), or manufactured:<seed>")
        ->required();
    solve_cmd->add_option("--method", method_str, "se or de")->required();
    solve_cmd->add_option("--n", truncation, "truncation index N (grid has 2N+1 points)")
        ->required()
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--eps", eps, "margin subtracted when forming d");
    solve_cmd->add_option("--eval-points", eval_points, "interior error-grid size")
        ->check(CLI::PositiveNumber);

    CLI::App* converge_cmd =
        app.add_subcommand("converge", "Sweep N for both methods, CSV to --out");
    converge_cmd->add_option("--case", case_name, "case name (see `list`), or manufactured:<seed>")
        ->required();
    converge_cmd->add_option("--n-list", n_list, "ascending N values")->delimiter(',');
    converge_cmd->add_option("--eps", eps, "margin subtracted when forming d");
    converge_cmd->add_option("--eval-points", eval_points, "interior error-grid size")
        ->check(CLI::PositiveNumber);
    converge_cmd->add_option("--out", out_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (solve_cmd->parsed())
            return cmd_solve(case_name, method_str, truncation, eps, eval_points);
        return cmd_converge(case_name, n_list, eps, eval_points, out_path);
    } catch (const SingularMatrixError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kSolverFailed;
    } catch (const EvaluationError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kEvaluation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
