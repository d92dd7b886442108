#include "sincvide/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sincvide/specfun.hpp"

namespace sincvide {

namespace {
constexpr double pi = std::numbers::pi;
}

double delta_minus1(int i, int j) { return 0.5 + si(pi * (i - j)) / pi; }

SolverWorkspace assemble(const Problem& problem, const SincGrid& grid) {
    const Interval& iv = problem.interval;
    if (iv.a != grid.interval().a || iv.b != grid.interval().b)
        throw std::invalid_argument("assemble: grid interval differs from problem interval");

    const int big_n = grid.truncation();
    const int n = grid.size();
    const double h = grid.h();

    // Toeplitz fill of the delta_minus1 matrix from one strip of Si values.
    Eigen::VectorXd si_row(2 * n - 1);  // si(pi*m), m = -(n-1)..(n-1)
    for (int m = -(n - 1); m <= n - 1; ++m) si_row[m + n - 1] = si(pi * m);
    Matrix iminus1(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) iminus1(i, j) = 0.5 + si_row[i - j + n - 1] / pi;

    Vector mu(n), g_nodes(n);
    for (int j = -big_n; j <= big_n; ++j) {
        const Point p = grid.node(j);
        mu[j + big_n] = problem.mu(p);
        g_nodes[j + big_n] = problem.g(p);
        if (!std::isfinite(mu[j + big_n]))
            throw EvaluationError("assemble: non-finite mu at node j = " + std::to_string(j));
        if (!std::isfinite(g_nodes[j + big_n]))
            throw EvaluationError("assemble: non-finite g at node j = " + std::to_string(j));
    }

    Matrix kernel(n, n);
    for (int i = -big_n; i <= big_n; ++i) {
        const Point row_node = grid.node(i);
        for (int j = -big_n; j <= big_n; ++j) {
            const double v = problem.kernel(row_node, grid.node(j));
            if (!std::isfinite(v))
                throw EvaluationError("assemble: non-finite kernel at nodes (i, j) = (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
            kernel(i + big_n, j + big_n) = v;
        }
    }

    const Vector& d = grid.derivs();
    // Diagonal factors enter as column scalings; the only dense product is
    // the n x n multiply for the second term of W.
    Matrix w = iminus1 * (h * mu.cwiseProduct(d)).asDiagonal();
    w.noalias() +=
        (h * h) * (iminus1 * d.asDiagonal()) * (iminus1.cwiseProduct(kernel) * d.asDiagonal());

    Vector rhs = Vector::Constant(n, problem.u_a);
    rhs.noalias() += h * (iminus1 * g_nodes.cwiseProduct(d));

    return {grid, std::move(iminus1), std::move(kernel), std::move(mu),
            d,    std::move(g_nodes), std::move(w),      std::move(rhs)};
}

SincSolution solve(const Problem& problem, const SincGrid& grid) {
    SolverWorkspace ws = assemble(problem, grid);
    const int n = grid.size();
    const double h = grid.h();

    const Matrix system = Matrix::Identity(n, n) - ws.w;
    Vector u;
    try {
        u = lu_solve(system, ws.rhs);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("solve: (I - W) singular at N = " +
                                      std::to_string(grid.truncation()),
                                  grid.truncation());
    }

    const double residual = (system * u - ws.rhs).cwiseAbs().maxCoeff();
    const double rhs_inf = ws.rhs.cwiseAbs().maxCoeff();

    Vector aux = h * (ws.iminus1.cwiseProduct(ws.kernel) * ws.deriv.cwiseProduct(u));
    Vector coeffs = ws.g_nodes + ws.mu.cwiseProduct(u) + aux;

    return {problem,          grid,    std::move(u), std::move(ws.g_nodes),
            std::move(aux),   std::move(coeffs),     residual, rhs_inf};
}

double eval_solution(const SincSolution& sol, double t) {
    const Interval& iv = sol.grid.interval();
    if (t == iv.a) return sol.problem.u_a;
    if (t == iv.b)
        return sol.problem.u_a + sol.grid.h() * sol.coeffs.dot(sol.grid.derivs());
    return eval_solution(sol, Transformed{psi_inverse(sol.grid.params().method, iv, t)});
}

double eval_solution(const SincSolution& sol, Transformed x) {
    const SincGrid& grid = sol.grid;
    const int big_n = grid.truncation();
    double acc = 0.0;
    for (int j = -big_n; j <= big_n; ++j)
        acc += sol.coeffs[j + big_n] * grid.deriv(j) * basis_j(j, grid.h(), x.x);
    return sol.problem.u_a + acc;
}

double max_error(const SincSolution& sol, const std::function<double(double)>& exact,
                 int samples) {
    if (samples < 1) throw std::invalid_argument("max_error: need samples >= 1");
    const Interval& iv = sol.grid.interval();
    double worst = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double t = iv.a + i * iv.length() / (samples + 1);
        worst = std::max(worst, std::abs(eval_solution(sol, t) - exact(t)));
    }
    return worst;
}

}  // namespace sincvide
