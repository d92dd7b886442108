#include "sincvide/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sincvide/specfun.hpp"

namespace sincvide {

namespace {
constexpr double pi = std::numbers::pi;
}

RegularityParams::RegularityParams(double alpha_, double d_, Method method_)
    : alpha(alpha_), d(d_), method(method_) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("RegularityParams: alpha must lie in (0, 1]");
    const double d_sup = method == Method::SE ? pi : pi / 2;
    if (!(d > 0.0) || !(d < d_sup))
        throw std::invalid_argument("RegularityParams: d out of range for " +
                                    std::string(method_name(method)));
}

double mesh_size(const RegularityParams& params, int truncation) {
    if (truncation < 1) throw std::invalid_argument("mesh_size: need N >= 1");
    if (params.method == Method::SE) return std::sqrt(pi * params.d / (params.alpha * truncation));
    const double arg = 2.0 * params.d * truncation / params.alpha;
    if (!(arg > 1.0))
        throw std::invalid_argument("mesh_size: DE requires 2*d*N/alpha > 1 (got " +
                                    std::to_string(arg) + ")");
    return std::log(arg) / truncation;
}

double psi(Method method, const Interval& iv, double x) {
    const double half = 0.5 * iv.length();
    const double inner = method == Method::SE ? 0.5 * x : 0.5 * pi * std::sinh(x);
    return iv.midpoint() + half * std::tanh(inner);
}

double psi_deriv(Method method, const Interval& iv, double x) {
    const double len = iv.length();
    if (method == Method::SE) {
        const double q = std::exp(-std::abs(x));
        const double onep = 1.0 + q;
        return len * q / (onep * onep);
    }
    const double q = std::exp(-pi * std::sinh(std::abs(x)));
    if (q == 0.0) return 0.0;  // true value < 1e-300 here
    const double onep = 1.0 + q;
    return len * pi * std::cosh(x) * q / (onep * onep);
}

double psi_inverse(Method method, const Interval& iv, double t) {
    if (!(t > iv.a) || !(t < iv.b))
        throw std::domain_error("psi_inverse: t must lie strictly inside (a, b)");
    if (method == Method::SE) return std::log((t - iv.a) / (iv.b - t));
    const double y = (2.0 * t - iv.a - iv.b) / iv.length();
    return std::asinh(2.0 / pi * std::atanh(y));
}

SincGrid::SincGrid(const Interval& iv, const RegularityParams& params, int truncation)
    : interval_(iv), params_(params), truncation_(truncation),
      h_(mesh_size(params, truncation)) {
    const int n = size();
    points_.resize(n);
    derivs_.resize(n);
    dist_a_.resize(n);
    dist_b_.resize(n);

    const double len = iv.length();
    // Fill j >= 0 and mirror, so the symmetry dist_a(-j) == dist_b(j) is exact.
    for (int j = 0; j <= truncation_; ++j) {
        const double x = j * h_;
        // exponent such that t_j - a = len / (1 + exp(-e)), b - t_j = len / (1 + exp(e))
        const double e = params.method == Method::SE ? x : pi * std::sinh(x);
        const double da = len / (1.0 + std::exp(-e));
        const double db = len / (1.0 + std::exp(e));
        const double dv = psi_deriv(params.method, iv, x);

        dist_a_[truncation_ + j] = da;
        dist_b_[truncation_ + j] = db;
        dist_a_[truncation_ - j] = db;
        dist_b_[truncation_ - j] = da;
        derivs_[truncation_ + j] = dv;
        derivs_[truncation_ - j] = dv;
        points_[truncation_ + j] = j == 0 ? iv.midpoint() : iv.b - db;
        points_[truncation_ - j] = j == 0 ? iv.midpoint() : iv.a + db;
    }
}

SincGrid build_grid(const Interval& iv, const RegularityParams& params, int truncation) {
    return SincGrid(iv, params, truncation);
}

double weight(const SincGrid& grid, int j, double t) {
    const Interval& iv = grid.interval();
    if (!(t > iv.a) || !(t < iv.b))
        throw std::domain_error("weight: t must lie strictly inside (a, b)");
    return weight(grid, j, Transformed{psi_inverse(grid.params().method, iv, t)});
}

double weight(const SincGrid& grid, int j, Transformed x) {
    return grid.deriv(j) * basis_j(j, grid.h(), x.x);
}

}  // namespace sincvide
