#pragma once

#include <functional>

#include <Eigen/Dense>

#include "sincvide/transform.hpp"
#include "sincvide/types.hpp"

namespace sincvide {

/// Sinc indefinite-integration rule for one integrand on one grid:
/// F(t) ~ sum_j samples[j] * w_j(t) approximates int_a^t f(s) ds.
struct IndefiniteApprox {
    SincGrid grid;
    Eigen::VectorXd samples;  // f(t_j), j = -N..N
};

/// Sample f at all grid nodes. f receives the node with its overflow-safe
/// endpoint distances. A non-finite sample raises EvaluationError naming the
/// node index.
IndefiniteApprox build_indefinite(const SincGrid& grid,
                                  const std::function<double(const Point&)>& f);

/// Evaluate the approximation. At t = a the value is 0 and at t = b it is
/// h * sum_j samples[j] * psi'(jh), the endpoint limits of the basis.
double eval_indefinite(const IndefiniteApprox& approx, double t);

/// Evaluate at a real-line coordinate x (t = psi(x)).
double eval_indefinite(const IndefiniteApprox& approx, Transformed x);

}  // namespace sincvide
