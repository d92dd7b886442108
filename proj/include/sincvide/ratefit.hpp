#pragma once

#include <vector>

namespace sincvide {

/// Least-squares line y = slope*x + intercept with coefficient of
/// determination; count is the number of points used.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    int count = 0;
};

/// Fit a line through (x[i], y[i]); needs at least two points with distinct x.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sincvide
