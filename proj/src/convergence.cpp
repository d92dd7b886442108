#include "sincvide/convergence.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sincvide {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    if (std::isnan(v)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_field(const std::string& s) {
    if (s == "NA") return nan;
    return std::stod(s);
}

ConvergenceRow run_one(const BenchmarkCase& bc, Method method, int truncation, int samples) {
    ConvergenceRow row{method, truncation, nan, nan, nan, nan, nan, false, ""};
    const RegularityParams& params = method == Method::SE ? bc.se : bc.de;
    try {
        row.h = mesh_size(params, truncation);
        const SincGrid grid = build_grid(bc.problem.interval, params, truncation);
        const auto start = std::chrono::steady_clock::now();
        const SincSolution sol = solve(bc.problem, grid);
        const auto stop = std::chrono::steady_clock::now();
        row.solve_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.max_error = max_error(sol, bc.exact, samples);
        row.residual = sol.residual_inf;
        row.rhs_inf = sol.rhs_inf;
        row.ok = true;
    } catch (const std::exception& e) {
        row.message = e.what();
    }
    return row;
}

RateFit fit_method(const ConvergenceReport& report, Method method) {
    RateFit fit;
    const double alpha = method == Method::SE ? report.alpha_se : report.alpha_de;
    const double d = method == Method::SE ? report.d_se : report.d_de;
    fit.theory_slope = method == Method::SE ? -std::sqrt(std::numbers::pi * d * alpha)
                                            : -std::numbers::pi * d;
    std::vector<double> xs, ys;
    for (const ConvergenceRow& row : report.rows) {
        if (row.method != method || !row.ok) continue;
        if (!(row.max_error >= kErrorFloor)) continue;
        xs.push_back(rate_abscissa(method, row.truncation, alpha, d));
        ys.push_back(std::log(row.max_error));
    }
    if (xs.size() >= 2) {
        fit.line = fit_line(xs, ys);
        fit.sufficient = true;
    }
    return fit;
}

}  // namespace

double rate_abscissa(Method method, int truncation, double alpha, double d) {
    if (method == Method::SE) return std::sqrt(static_cast<double>(truncation));
    return truncation / std::log(2.0 * d * truncation / alpha);
}

ConvergenceReport run_convergence(const BenchmarkCase& bc, const std::vector<int>& n_list,
                                  double eps, int samples) {
    if (n_list.empty()) throw std::invalid_argument("run_convergence: empty N list");
    ConvergenceReport report;
    report.case_name = bc.name;
    report.eps = eps;
    report.alpha_se = bc.se.alpha;
    report.d_se = bc.se.d;
    report.alpha_de = bc.de.alpha;
    report.d_de = bc.de.d;
    for (Method method : {Method::SE, Method::DE})
        for (int n : n_list) report.rows.push_back(run_one(bc, method, n, samples));
    report.fit_se = fit_method(report, Method::SE);
    report.fit_de = fit_method(report, Method::DE);
    return report;
}

std::string to_csv(const ConvergenceReport& report) {
    std::ostringstream os;
    os << "case,method,alpha,d_used,N,h,max_error,residual,solve_ms\n";
    for (const ConvergenceRow& row : report.rows) {
        const bool se = row.method == Method::SE;
        os << report.case_name << ',' << method_name(row.method) << ','
           << fmt(se ? report.alpha_se : report.alpha_de) << ','
           << fmt(se ? report.d_se : report.d_de) << ',' << row.truncation << ','
           << fmt(row.h) << ',' << fmt(row.max_error) << ',' << fmt(row.residual) << ','
           << fmt(row.solve_ms) << '\n';
    }
    return os.str();
}

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<CsvRow> rows;
    bool header = true;
    while (std::getline(is, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 9) throw std::runtime_error("parse_csv: malformed row: " + line);
        rows.push_back({fields[0], fields[1], parse_field(fields[2]), parse_field(fields[3]),
                        std::stoi(fields[4]), parse_field(fields[5]), parse_field(fields[6]),
                        parse_field(fields[7]), parse_field(fields[8])});
    }
    return rows;
}

}  // namespace sincvide
