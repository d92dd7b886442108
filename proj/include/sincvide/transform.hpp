#pragma once

#include <Eigen/Dense>

#include "sincvide/types.hpp"

namespace sincvide {

/// Mesh size in the transformed variable: sqrt(pi*d/(alpha*N)) for SE,
/// log(2*d*N/alpha)/N for DE. The DE form requires 2*d*N/alpha > 1.
double mesh_size(const RegularityParams& params, int truncation);

/// The variable transformation mapping the real line onto (a, b):
/// tanh(x/2) based for SE, tanh((pi/2) sinh x) based for DE.
double psi(Method method, const Interval& iv, double x);

/// Derivative of psi, computed in exp form so it underflows to 0 only where
/// the true value is below roughly 1e-300.
double psi_deriv(Method method, const Interval& iv, double x);

/// Inverse transformation; requires a < t < b.
double psi_inverse(Method method, const Interval& iv, double t);

/// Immutable Sinc grid: 2N+1 points t_j = psi(j*h), the transformation
/// derivatives psi'(j*h), and closed-form endpoint distances t_j - a and
/// b - t_j that stay accurate where t_j itself rounds onto an endpoint.
class SincGrid {
  public:
    SincGrid(const Interval& iv, const RegularityParams& params, int truncation);

    const Interval& interval() const { return interval_; }
    const RegularityParams& params() const { return params_; }
    int truncation() const { return truncation_; }  // N
    int size() const { return 2 * truncation_ + 1; }
    double h() const { return h_; }

    // j-indexed access, j in [-N, N]
    double point(int j) const { return points_[j + truncation_]; }
    double deriv(int j) const { return derivs_[j + truncation_]; }
    double dist_a(int j) const { return dist_a_[j + truncation_]; }
    double dist_b(int j) const { return dist_b_[j + truncation_]; }
    Point node(int j) const { return {point(j), dist_a(j), dist_b(j)}; }

    const Eigen::VectorXd& points() const { return points_; }
    const Eigen::VectorXd& derivs() const { return derivs_; }
    const Eigen::VectorXd& dists_a() const { return dist_a_; }
    const Eigen::VectorXd& dists_b() const { return dist_b_; }

  private:
    Interval interval_;
    RegularityParams params_;
    int truncation_;
    double h_;
    Eigen::VectorXd points_, derivs_, dist_a_, dist_b_;
};

SincGrid build_grid(const Interval& iv, const RegularityParams& params, int truncation);

/// Indefinite-integration weight w_j(t) = psi'(j*h) * basis_j(j, h, psi^{-1}(t)).
/// The scalar-t overload requires a < t < b; the Transformed overload takes the
/// real-line coordinate directly.
double weight(const SincGrid& grid, int j, double t);
double weight(const SincGrid& grid, int j, Transformed x);

}  // namespace sincvide
