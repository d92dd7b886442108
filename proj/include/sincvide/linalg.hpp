#pragma once

#include <Eigen/Dense>

namespace sincvide {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Entrywise (Hadamard) product; shapes must match.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// Solve A x = b by LU with partial pivoting. Throws SingularMatrixError when
/// a pivot falls below 1e-300 * ||A||_inf (or the matrix is identically zero).
Vector lu_solve(const Matrix& a, const Vector& b);

}  // namespace sincvide
