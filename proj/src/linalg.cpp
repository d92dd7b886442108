#include "sincvide/linalg.hpp"

#include <stdexcept>
#include <string>

#include "sincvide/types.hpp"

namespace sincvide {

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hadamard: shape mismatch");
    return a.cwiseProduct(b);
}

Vector lu_solve(const Matrix& a, const Vector& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("lu_solve: matrix must be square");
    if (a.rows() != b.size()) throw std::invalid_argument("lu_solve: size mismatch");

    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    Eigen::PartialPivLU<Matrix> lu(a);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (norm == 0.0 || min_pivot < 1e-300 * norm)
        throw SingularMatrixError("lu_solve: matrix singular to working precision (pivot " +
                                  std::to_string(min_pivot) + ")");
    return lu.solve(b);
}

}  // namespace sincvide
