#include "sincvide/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincvide {

namespace {

// c[0] + c[1]*x + ... + c[n-1]*x^(n-1)
double polyeval(double x, const double* c, int n) {
    double r = c[n - 1];
    for (int i = n - 2; i >= 0; --i) r = r * x + c[i];
    return r;
}

// Maclaurin series sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), summed with
// compensation; terms keep shrinking for |x| <= 4.
double si_series(double x) {
    const double z = x * x;
    double term = x;
    double sum = x;
    double comp = 0.0;
    for (int k = 1; k < 64; ++k) {
        term *= -z * (2 * k - 1) / ((2 * k + 1.0) * (2 * k + 1.0) * (2 * k));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Rational approximations for the auxiliary functions
//   f(x) = int_0^inf sin(t)/(x+t) dt,   g(x) = int_0^inf cos(t)/(x+t) dt
// in y = 1/x^2, accurate to better than 1e-16 for x >= 4.
double si_asymptotic(double x) {
    static const double fn[] = {
        1.0,
        7.44437068161936700618e2,
        1.96396372895146869801e5,
        2.37750310125431834034e7,
        1.43073403821274636888e9,
        4.33736238870432522765e10,
        6.40533830574022022911e11,
        4.20968180571076940208e12,
        1.00795182980368574617e13,
        4.94816688199951963482e12,
        -4.94701168645415959931e11,
    };
    static const double fd[] = {
        1.0,
        7.46437068161927678031e2,
        1.97865247031583951450e5,
        2.41535670165126845144e7,
        1.47478952192985464958e9,
        4.58595115847765779830e10,
        7.08501308149515401563e11,
        5.06084464593475076774e12,
        1.43468549171581016479e13,
        1.11535493509914254097e13,
    };
    static const double gn[] = {
        1.0,
        8.1359520115168615e2,
        2.35239181626478200e5,
        3.12557570795778731e7,
        2.06297595146763354e9,
        6.83052205423625007e10,
        1.09049528450362786e12,
        7.57664583257834349e12,
        1.81004487464664575e13,
        6.43291613143049485e12,
        -1.36517137670871689e12,
    };
    static const double gd[] = {
        1.0,
        8.19595201151451564e2,
        2.40036752835578777e5,
        3.26026661647090822e7,
        2.23355543278099360e9,
        7.87465017341829930e10,
        1.39866710696414565e12,
        1.17164723371736605e13,
        4.01839087307656620e13,
        3.99653257887490811e13,
    };

    const double y = 1.0 / (x * x);
    const double f = polyeval(y, fn, 11) / (x * polyeval(y, fd, 10));
    const double g = y * polyeval(y, gn, 11) / polyeval(y, gd, 10);
    return std::numbers::pi / 2 - f * std::cos(x) - g * std::sin(x);
}

}  // namespace

double si(double x) {
    if (std::isnan(x)) throw std::domain_error("si: NaN argument");
    if (std::isinf(x)) return std::copysign(std::numbers::pi / 2, x);
    const double ax = std::abs(x);
    const double s = ax <= 4.0 ? si_series(ax) : si_asymptotic(ax);
    return std::copysign(s, x);
}

double basis_j(int j, double h, double xi) {
    if (!(h > 0.0)) throw std::domain_error("basis_j: mesh size h must be positive");
    return h * (0.5 + si(std::numbers::pi * (xi / h - j)) / std::numbers::pi);
}

}  // namespace sincvide
