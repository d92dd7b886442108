#include "sincvide/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace sincvide {

namespace {

constexpr double pi = std::numbers::pi;

// --- the four registry problems -------------------------------------------

BenchmarkCase make_brunner(double eps) {
    Problem p{
        Interval(0.0, 1.0),
        1.0,
        [](const Point& pt) { return 1.0 + 2.0 * pt.t; },
        [](const Point&) { return -1.0; },
        [](const Point& s, const Point& r) {
            return s.t * (1.0 + 2.0 * s.t) * std::exp(r.t * (s.t - r.t));
        },
    };
    return {"brunner",
            std::move(p),
            [](double t) { return std::exp(t * t); },
            RegularityParams(1.0, pi - eps, Method::SE),
            RegularityParams(1.0, pi / 2 - eps, Method::DE),
            pi,
            pi / 2,
            true};
}

BenchmarkCase make_zarebnia_log(double eps) {
    Problem p{
        Interval(0.0, 1.0),
        0.0,
        [](const Point& pt) {
            const double lg = std::log1p(pt.t);
            return 1.0 / (1.0 + pt.t) - 0.5 * (2.0 + pt.t * lg) * lg;
        },
        [](const Point&) { return 1.0; },
        [](const Point& s, const Point& r) { return s.t / (r.t + 1.0); },
    };
    // Half-width of the analyticity domain limited by the pole at t = -1.
    const double z = std::sqrt((1.0 + std::sqrt(1.0 + std::pow(2.0 * pi / std::log(2.0), 2))) / 2.0);
    const double x = std::log(2.0) / pi * (1.0 + z);
    const double y = 1.0 + 1.0 / z;
    const double d_sup = std::atan(y / x);
    return {"zarebnia-log",
            std::move(p),
            [](double t) { return std::log1p(t); },
            RegularityParams(1.0, pi - eps, Method::SE),
            RegularityParams(1.0, d_sup - eps, Method::DE),
            pi,
            d_sup,
            true};
}

BenchmarkCase make_sqrt(double eps) {
    Problem p{
        Interval(0.0, 1.0),
        0.0,
        // Endpoint-singular data; always evaluated through dist_a.
        [](const Point& pt) { return 0.5 / std::sqrt(pt.dist_a); },
        [](const Point& pt) { return -pt.t; },
        [](const Point& s, const Point& r) { return std::sqrt(s.dist_a / r.dist_a); },
    };
    return {"sqrt",
            std::move(p),
            [](double t) { return std::sqrt(t); },
            RegularityParams(0.5, pi - eps, Method::SE),
            RegularityParams(0.5, pi / 2 - eps, Method::DE),
            pi,
            pi / 2,
            true};
}

// Example with infinitely many singular points accumulating at both
// endpoints: p(t) = sin(4 artanh t), q(t) = cos(4 artanh t) + cosh(pi).
double osc_phase(const Point& pt) {
    // 4 artanh(t) = 2 log((1+t)/(1-t)), from the endpoint distances
    return 2.0 * std::log(pt.dist_a / pt.dist_b);
}

BenchmarkCase make_oscillatory(double eps) {
    const double cosh_pi = std::cosh(pi);
    Problem p{
        Interval(-1.0, 1.0),
        0.0,
        [cosh_pi](const Point& pt) {
            const double phase = osc_phase(pt);
            const double pv = std::sin(phase);
            const double qv = std::cos(phase) + cosh_pi;
            const double one_minus_t2 = pt.dist_a * pt.dist_b;
            return -pt.t * std::sqrt(qv / one_minus_t2) -
                   2.0 * pv / std::sqrt(one_minus_t2 * qv);
        },
        [](const Point& pt) {
            return std::sqrt((3.0 + pt.t * pt.t) * (pt.dist_a * pt.dist_b));
        },
        [cosh_pi](const Point& s, const Point& r) {
            const double phase = osc_phase(r);
            const double pv = std::sin(phase);
            const double qv = std::cos(phase) + cosh_pi;
            return 2.0 * std::sqrt((3.0 + s.t * s.t) / (r.dist_a * r.dist_b)) *
                   (r.t + pv / qv);
        },
    };
    const double de_d = std::asin((pi / 2 - eps) / pi);
    return {"oscillatory",
            std::move(p),
            [cosh_pi](double t) {
                const double m = (1.0 - t) * (1.0 + t);
                if (m <= 0.0) return 0.0;
                return std::sqrt(m * (std::cos(4.0 * std::atanh(t)) + cosh_pi));
            },
            RegularityParams(0.5, pi / 2 - eps, Method::SE),
            RegularityParams(0.5, de_d, Method::DE),
            pi / 2,
            std::asin(0.5),
            false};
}

// --- polynomial machinery for manufactured problems ------------------------

using Poly = std::vector<double>;  // ascending coefficients; empty = 0

double poly_eval(const Poly& p, double t) {
    double r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

Poly poly_add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

Poly poly_scale(Poly a, double c) {
    for (double& v : a) v *= c;
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_deriv(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<double>(i);
    return r;
}

// Antiderivative with zero constant term, so evaluating at the left endpoint
// of [0, 1] contributes nothing.
Poly poly_antideriv(const Poly& a) {
    Poly r(a.size() + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i] / static_cast<double>(i + 1);
    return r;
}

// Multiply by t^k.
Poly poly_shift(const Poly& a, int k) {
    if (a.empty()) return {};
    Poly r(a.size() + k, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

struct PolyData {
    Poly u;                    // chosen solution
    Poly mu;
    std::vector<Poly> kernel;  // kernel[p] = coefficient polynomial in r of t^p
};

PolyData draw_poly_data(unsigned seed) {
    if (seed == 0) return {{1.0}, {}, {}};
    if (seed == 1) return {{0.0, 1.0}, {}, {}};
    if (seed == 2) return {{0.0, 0.0, 1.0}, {1.0}, {{}, {1.0}}};

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> wide(-2.0, 2.0);
    std::uniform_real_distribution<double> narrow(-1.0, 1.0);
    PolyData data;
    data.u.resize(5);
    for (double& c : data.u) c = wide(rng);
    data.mu.resize(3);
    for (double& c : data.mu) c = wide(rng);
    data.kernel.resize(3);
    for (Poly& kp : data.kernel) {
        kp.resize(3);
        for (double& c : kp) c = narrow(rng);
    }
    return data;
}

}  // namespace

std::vector<BenchmarkCase> registry(double eps) {
    std::vector<BenchmarkCase> cases;
    cases.push_back(make_brunner(eps));
    cases.push_back(make_zarebnia_log(eps));
    cases.push_back(make_sqrt(eps));
    cases.push_back(make_oscillatory(eps));
    return cases;
}

const BenchmarkCase* find_case(const std::vector<BenchmarkCase>& cases, std::string_view name) {
    for (const BenchmarkCase& c : cases)
        if (c.name == name) return &c;
    return nullptr;
}

ManufacturedProblem manufactured(unsigned seed) {
    const PolyData data = draw_poly_data(seed);

    // g = u' - mu*u - int_0^t k(t, r) u(r) dr, all in closed form
    Poly g = poly_add(poly_deriv(data.u), poly_scale(poly_mul(data.mu, data.u), -1.0));
    for (std::size_t p = 0; p < data.kernel.size(); ++p) {
        const Poly inner = poly_antideriv(poly_mul(data.kernel[p], data.u));
        g = poly_add(std::move(g), poly_shift(poly_scale(inner, -1.0), static_cast<int>(p)));
    }

    const Poly u = data.u;
    const Poly mu = data.mu;
    const std::vector<Poly> kernel = data.kernel;
    Problem problem{
        Interval(0.0, 1.0),
        poly_eval(u, 0.0),
        [g](const Point& pt) { return poly_eval(g, pt.t); },
        [mu](const Point& pt) { return poly_eval(mu, pt.t); },
        [kernel](const Point& s, const Point& r) {
            double acc = 0.0;
            double tp = 1.0;
            for (const Poly& kp : kernel) {
                acc += tp * poly_eval(kp, r.t);
                tp *= s.t;
            }
            return acc;
        },
    };
    return {std::move(problem), [u](double t) { return poly_eval(u, t); }};
}

BenchmarkCase manufactured_case(unsigned seed, double eps) {
    ManufacturedProblem mp = manufactured(seed);
    return {"manufactured:" + std::to_string(seed),
            std::move(mp.problem),
            std::move(mp.exact),
            RegularityParams(1.0, pi - eps, Method::SE),
            RegularityParams(1.0, pi / 2 - eps, Method::DE),
            pi,
            pi / 2,
            true};
}

}  // namespace sincvide
