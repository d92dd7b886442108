#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sincvide {

/// Variable-transformation family: single-exponential (tanh) or
/// double-exponential (tanh-sinh).
enum class Method { SE, DE };

inline std::string_view method_name(Method m) { return m == Method::SE ? "SE" : "DE"; }

/// Finite interval [a, b], a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw std::invalid_argument("Interval: endpoints must be finite with a < b");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
};

/// Regularity description of the problem data on the transformed domain:
/// alpha is the endpoint decay exponent, d the half-width of the strip of
/// analyticity in the transformed variable. Valid ranges: 0 < alpha <= 1,
/// 0 < d < pi for SE and 0 < d < pi/2 for DE.
struct RegularityParams {
    double alpha;
    double d;
    Method method;

    RegularityParams(double alpha_, double d_, Method method_);
};

/// A point inside (a, b) carrying overflow-safe distances to both endpoints.
/// dist_a and dist_b come from closed-form expressions in the grid builder,
/// so integrands with endpoint singularities can be evaluated without
/// cancellation even where t itself rounds onto an endpoint.
struct Point {
    double t;
    double dist_a;  // t - a
    double dist_b;  // b - t
};

/// Coordinate on the transformed real line; the interval point is psi(x).
struct Transformed {
    double x;
};

/// Sampling a user callable produced a non-finite value.
class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A linear system was singular to working precision.
class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(const std::string& what, int truncation = -1)
        : std::runtime_error(what), truncation_(truncation) {}

    /// Truncation index N of the offending discretization, or -1 when the
    /// system did not come from a Sinc grid.
    int truncation() const { return truncation_; }

  private:
    int truncation_;
};

}  // namespace sincvide
