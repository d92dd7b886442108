#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sincvide/solver.hpp"

namespace sincvide {

/// A benchmark problem with known exact solution and the regularity
/// parameters that make the convergence theory apply to each method.
struct BenchmarkCase {
    std::string name;
    Problem problem;
    std::function<double(double)> exact;
    RegularityParams se;
    RegularityParams de;
    double se_d_sup;      // supremum the SE d was derived from
    double de_d_sup;      // DE analogue
    bool de_full_rate;    // false: DE is only expected to reach an SE-like rate
};

/// The four benchmark problems. eps is the safety margin subtracted from the
/// analyticity-domain supremum when forming each d.
std::vector<BenchmarkCase> registry(double eps = 0.05);

/// Case lookup by name; nullptr when absent.
const BenchmarkCase* find_case(const std::vector<BenchmarkCase>& cases, std::string_view name);

/// A problem built from a chosen polynomial solution, with g derived in
/// closed form so the exact solution is known by construction.
struct ManufacturedProblem {
    Problem problem;
    std::function<double(double)> exact;
};

/// Seeded family on [0, 1]. Seed 0 is the zero-data problem (constant
/// solution), seed 1 has u*(t) = t, seed 2 has u*(t) = t^2 with mu = 1 and
/// k(t, r) = t; larger seeds draw random polynomial u*, mu and kernel.
ManufacturedProblem manufactured(unsigned seed);

/// manufactured(seed) packaged as a BenchmarkCase (alpha = 1, entire data).
BenchmarkCase manufactured_case(unsigned seed, double eps = 0.05);

}  // namespace sincvide
