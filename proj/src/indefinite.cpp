#include "sincvide/indefinite.hpp"

#include <cmath>
#include <string>

#include "sincvide/specfun.hpp"

namespace sincvide {

IndefiniteApprox build_indefinite(const SincGrid& grid,
                                  const std::function<double(const Point&)>& f) {
    const int big_n = grid.truncation();
    Eigen::VectorXd samples(grid.size());
    for (int j = -big_n; j <= big_n; ++j) {
        const double v = f(grid.node(j));
        if (!std::isfinite(v))
            throw EvaluationError("build_indefinite: non-finite sample at node j = " +
                                  std::to_string(j));
        samples[j + big_n] = v;
    }
    return {grid, samples};
}

double eval_indefinite(const IndefiniteApprox& approx, double t) {
    const SincGrid& grid = approx.grid;
    const Interval& iv = grid.interval();
    if (t == iv.a) return 0.0;
    if (t == iv.b) return grid.h() * approx.samples.dot(grid.derivs());
    return eval_indefinite(approx, Transformed{psi_inverse(grid.params().method, iv, t)});
}

double eval_indefinite(const IndefiniteApprox& approx, Transformed x) {
    const SincGrid& grid = approx.grid;
    const int big_n = grid.truncation();
    double acc = 0.0;
    for (int j = -big_n; j <= big_n; ++j)
        acc += approx.samples[j + big_n] * grid.deriv(j) * basis_j(j, grid.h(), x.x);
    return acc;
}

}  // namespace sincvide
