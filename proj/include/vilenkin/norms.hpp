#pragma once

// L_p / weak-L_p quasinorms, martingale Hardy norms, the H_p modulus of
// continuity, p-atom certificates and atomic assembly.
//
// A martingale is represented by its finest level, a Spectrum at resolution
// N; coarser levels are conditional expectations.

#include <optional>
#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

// ((1/M_N) sum |f|^p)^{1/p}, p > 0.
double lp_quasinorm(const StepFunction& f, double p);

// One achieved magnitude v > 0 with mu(|f| >= v).
struct LevelSet {
    double magnitude = 0.0;
    double measure = 0.0;
};

// Distinct nonzero magnitudes of |f|, descending, with their upper-level
// measures.
std::vector<LevelSet> distribution(const StepFunction& f);

struct WeakNorm {
    double powered = 0.0;    // sup_{lambda>0} lambda^p mu(|f| > lambda)
    double root = 0.0;       // powered^{1/p}, homogeneous of degree 1
    double magnitude = 0.0;  // level attaining the supremum
};

// The supremum over lambda is attained as a left limit at an achieved
// magnitude v, where it equals v^p mu(|f| >= v).
WeakNorm weak_lp_quasinorm(const StepFunction& f, double p);

// ||f*||_p.
double hardy_norm(const Spectrum& s, double p);

// omega(1/M_n, f)_{H_p} = ||f - S_{M_n} f||_{H_p}, n <= N.
double modulus_of_continuity(const Spectrum& s, int n, double p);

struct NormReport {
    double p = 0.0;
    double lp = 0.0;
    WeakNorm weak;
    std::optional<double> hardy;
    std::vector<LevelSet> levels;
};

NormReport norm_report(const StepFunction& f, double p);
NormReport norm_report(const Spectrum& s, double p);  // includes the Hardy norm

// The cylinder I_depth(base).
struct AtomInterval {
    GroupPoint base;
    int depth = 0;
};

struct AtomCertificate {
    AtomInterval interval;
    bool zero_mean = false;
    double mean_residual = 0.0;  // |int_I a dmu|
    bool sup_bound = false;
    double sup_ratio = 0.0;  // ||a||_inf * mu(I)^{1/p}, must be <= 1
    bool support = false;
    double outside_max = 0.0;  // max |a| off I

    bool valid() const noexcept { return zero_mean && sup_bound && support; }
};

// Relative tolerances: mean and off-support values against 1e-12 ||a||_inf,
// the sup ratio against 1 + 1e-12.
AtomCertificate validate_atom(const StepFunction& a, double p, const AtomInterval& interval);

struct AtomicDecomposition {
    double p = 1.0;
    std::vector<double> coefficients;
    std::vector<StepFunction> atoms;
    std::vector<AtomInterval> intervals;
};

struct Assembly {
    StepFunction level;               // f_n = sum_k mu_k S_{M_n} a_k
    double coefficient_bound = 0.0;   // (sum |mu_k|^p)^{1/p}
    std::vector<std::size_t> invalid; // atoms failing their certificate
};

Assembly assemble_from_atoms(const AtomicDecomposition& d, int n, const Structure& vs);

}  // namespace vilenkin
