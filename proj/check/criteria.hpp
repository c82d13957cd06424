#pragma once

// The invariant suite behind `vilenkin-lab check`: criteria 1-12, each
// reported as one PASS/FAIL line.  Thresholds are compile-time constants.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace vilenkin::check {

struct Options {
    double min_speedup = 20.0;  // fast vs naive transform at M_N = 2^16
};

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

Result orthonormality();
Result dirichlet_exactness();
Result fejer_lower_bound();
Result fast_transform(const Options& options);
Result fejer_algebra();
Result coefficient_laws();
Result atom_certificates();
Result modulus_bounds();
Result divergence();
Result kernel_growth();
Result dyadic_convergence();
Result maximal_ratio_gate();

// "criterion <id> PASS|FAIL <name>: <detail> (<seconds> s)"
std::string format(const Result& r);

// Runs 1..12 in order, streaming one line per criterion.
std::vector<Result> run_all(const Options& options, std::ostream& out);
bool all_passed(const std::vector<Result>& results);

}  // namespace vilenkin::check
