#pragma once

#include <functional>

#include "sincvide/linalg.hpp"
#include "sincvide/transform.hpp"
#include "sincvide/types.hpp"

namespace sincvide {

/// A linear Volterra integro-differential problem
///
///   u'(t) = g(t) + mu(t) u(t) + int_a^t k(t, r) u(r) dr,   u(a) = u_a,
///
/// posed on interval. The callables receive grid nodes with overflow-safe
/// endpoint distances, so endpoint-singular data like g(t) = 1/sqrt(t - a)
/// stays evaluable at nodes that approach the endpoints.
struct Problem {
    Interval interval;
    double u_a;
    std::function<double(const Point&)> g;
    std::function<double(const Point&)> mu;
    std::function<double(const Point&, const Point&)> kernel;
};

/// Entries of the Sinc indefinite-integration matrix:
/// delta_minus1(i, j) = 1/2 + Si(pi*(i-j))/pi.
double delta_minus1(int i, int j);

/// Dense discretization of one problem on one grid. With diagonal matrices
/// M = diag(mu(t_j)) and D = diag(psi'(jh)),
///
///   W   = h*I1*M*D + h^2*I1*D*(I1 o K)*D,       (o = entrywise product)
///   rhs = u_a + h*I1*D*g_nodes,
///
/// where I1 is the delta_minus1 matrix and K the kernel matrix k(t_i, t_j).
/// The quadrature weights at the nodes reduce to w_j(t_i) = h psi'(jh)
/// delta_minus1(i,j), which is what makes the assembly exact.
struct SolverWorkspace {
    SincGrid grid;
    Matrix iminus1;  // delta_minus1 values, Toeplitz
    Matrix kernel;   // k(t_i, t_j)
    Vector mu;       // mu(t_j)
    Vector deriv;    // psi'(jh)
    Vector g_nodes;  // g(t_j)
    Matrix w;
    Vector rhs;
};

/// Sample the problem data and assemble W and the right-hand side.
/// Non-finite samples raise EvaluationError naming the node (pair).
SolverWorkspace assemble(const Problem& problem, const SincGrid& grid);

/// Nystrom solution: node values plus the precomputed coefficient vector that
/// makes pointwise evaluation O(n).
struct SincSolution {
    Problem problem;
    SincGrid grid;
    Vector node_values;  // u_N(t_j)
    Vector g_nodes;      // g(t_j)
    Vector aux;          // h * (I1 o K) * D * node_values
    Vector coeffs;       // g_nodes + mu .* node_values + aux
    double residual_inf; // ||(I - W) node_values - rhs||_inf
    double rhs_inf;      // ||rhs||_inf
};

/// Assemble and solve (I - W) u = rhs. A singular system is reported as
/// SingularMatrixError carrying the truncation index N.
SincSolution solve(const Problem& problem, const SincGrid& grid);

/// u_N(t) = u_a + sum_j coeffs[j] * w_j(t); O(n) per call. Admits t in
/// [a, b]; at the endpoints the basis limits give u_a and the full sum.
double eval_solution(const SincSolution& sol, double t);

/// Evaluate at a real-line coordinate x (t = psi(x)). Exact at Sinc points
/// x = j*h in the sense of the node values, without round-tripping t
/// through the inverse transformation.
double eval_solution(const SincSolution& sol, Transformed x);

/// max_i |u_N(t_i) - exact(t_i)| over the interior equispaced points
/// t_i = a + i*(b-a)/(samples+1), i = 1..samples.
double max_error(const SincSolution& sol, const std::function<double(double)>& exact,
                 int samples = 999);

}  // namespace sincvide
