#pragma once

namespace sincvide {

/// Sine integral Si(x) = int_0^x sin(tau)/tau dtau.
///
/// Maclaurin series for |x| <= 4, auxiliary-function asymptotic form
/// Si(x) = pi/2 - f(x)cos(x) - g(x)sin(x) beyond. Absolute error is below
/// 1e-14 for |x| <= 1e3. Odd by construction; +-inf maps to +-pi/2.
/// Throws std::domain_error on NaN input.
double si(double x);

/// Antiderivative of the j-th Sinc translate at mesh size h, evaluated at xi:
///
///   basis_j(j, h, xi) = h * (1/2 + Si(pi*(xi/h - j)) / pi).
///
/// Tends to 0 as xi -> -inf and to h as xi -> +inf; |basis_j| <= 1.1*h
/// everywhere. Throws std::domain_error unless h > 0.
double basis_j(int j, double h, double xi);

}  // namespace sincvide
