#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sincvide/benchmarks.hpp"
#include "sincvide/ratefit.hpp"

namespace sincvide {

/// Errors below this are treated as the double-precision floor and excluded
/// from rate fits.
inline constexpr double kErrorFloor = 1e-13;

struct ConvergenceRow {
    Method method;
    int truncation;       // N
    double h;             // NaN if the mesh was never valid
    double max_error;     // NaN on failure
    double residual;      // ||(I-W)u - rhs||_inf, NaN on failure
    double rhs_inf;       // not part of the CSV; kept for residual checks
    double solve_ms;      // assemble + solve wall time, NaN on failure
    bool ok;
    std::string message;  // failure reason when !ok
};

/// Fitted decay rate of ln(max_error) against the method's natural abscissa:
/// sqrt(N) for SE, N/log(2 d N / alpha) for DE.
struct RateFit {
    bool sufficient = false;  // at least two rows survived the floor filter
    LinearFit line;
    double theory_slope = 0.0;  // -sqrt(pi d alpha) for SE, -pi d for DE
};

struct ConvergenceReport {
    std::string case_name;
    double eps = 0.0;
    double alpha_se = 0.0, d_se = 0.0;
    double alpha_de = 0.0, d_de = 0.0;
    std::vector<ConvergenceRow> rows;
    RateFit fit_se, fit_de;
};

/// Run both methods over n_list (ascending). Per-N failures are recorded in
/// the row and excluded from the fits.
ConvergenceReport run_convergence(const BenchmarkCase& bc, const std::vector<int>& n_list,
                                  double eps, int samples = 999);

/// Abscissa used in the rate fit for one row.
double rate_abscissa(Method method, int truncation, double alpha, double d);

/// CSV with header case,method,alpha,d_used,N,h,max_error,residual,solve_ms;
/// numbers at 17 significant digits, LF line endings, NA for failed fields.
/// solve_ms is the one volatile column (wall time); everything else is
/// deterministic for fixed inputs.
std::string to_csv(const ConvergenceReport& report);

/// One parsed CSV data row; used to check that the emitted file round-trips.
struct CsvRow {
    std::string case_name;
    std::string method;
    double alpha, d_used;
    int truncation;
    double h, max_error, residual, solve_ms;  // NaN where the file says NA
};

std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace sincvide
