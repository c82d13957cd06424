#pragma once

// Finite truncations of the two divergence constructions.
//
// Atoms are built from Dirichlet-kernel differences D_{M_{k+1}} - D_{M_k},
// which equal M_{k+1} 1_{I_{k+1}} - M_k 1_{I_k}; that is the only reading
// whose spectra fill the blocks [M_k, M_{k+1}) and whose supports are
// cylinders.
//
//   2a:  a_k = (M_k^{1/p-1} / lambda) (D_{M_{k+1}} - D_{M_k}),  0 < p < 1/2
//        f   = sum_{i=0}^{A} (lambda / M_i^{1/p-2}) a_i,  f^(j) = M_i on [M_i, M_{i+1})
//
//   2b:  a_i = (M_{2M_i} / lambda) (D_{M_{2M_i+1}} - D_{M_{2M_i}}),  p = 1/2
//        f   = sum_{i=1}^{A} (lambda / M_i^2) a_i,
//        f^(j) = M_{2M_i} / M_i^2 on [M_{2M_i}, M_{2M_i+1})

#include <vector>

#include "vilenkin/norms.hpp"
#include "vilenkin/record.hpp"

namespace vilenkin {

struct Construction2a {
    double p = 0.25;
    int A = 0;
    Structure vs;
    Spectrum spectrum;
    AtomicDecomposition decomposition;
};

struct Construction2b {
    int A = 0;
    Structure vs;
    Spectrum spectrum;
    AtomicDecomposition decomposition;
};

StepFunction atom_2a(int k, double p, const Structure& vs);
AtomInterval atom_2a_interval(int k, const Structure& vs);  // I_k
Construction2a build_2a(double p, int A, const Structure& vs);

// Rows (n; omega, bound = M_n^{-(1/p-2)}, ratio = omega / bound,
// tail_sum = sum_{i=n}^{A} M_i^{-(1/p-2)}) for n in [n_first, n_last].
std::vector<ExperimentRecord> modulus_report_2a(const Construction2a& c, int n_first, int n_last);

// sigma_{M_k+1} f - f split along the dominant character term:
//   (M_k/(M_k+1)) (sigma_{M_k} f - f) + (1/(M_k+1)) (S_{M_k} f - f)
//   + (M_k/(M_k+1)) psi_{M_k}.
struct Divergence2a {
    int k = 0;
    double value = 0.0;     // weak-L_p root form of sigma_{M_k+1} f - f
    double powered = 0.0;   // p-powered form of the same
    double dominant = 0.0;  // weak root of (M_k/(M_k+1)) psi_{M_k}
    double head = 0.0;      // weak root of (M_k/(M_k+1)) (sigma_{M_k} f - f)
    double tail = 0.0;      // weak root of (1/(M_k+1)) (S_{M_k} f - f)
    double lp_fejer_dyadic = 0.0;  // ||sigma_{M_k} f - f||_p
};

Divergence2a divergence_2a(const Construction2a& c, int k);

StepFunction atom_2b(int i, const Structure& vs);
AtomInterval atom_2b_interval(int i, const Structure& vs);  // I_{2M_i}
// Throws CapacityError naming the required resolution 2M_A + 1.
Construction2b build_2b(int A, const Structure& vs);
int required_resolution_2b(int A, const Structure& vs);

// Rows (n; omega, bound = 1/n^2, ratio = omega n^2) for n in [n_first, n_last].
std::vector<ExperimentRecord> modulus_report_2b(const Construction2b& c, int n_first, int n_last);

// sigma_q f - f with q = q_{M_k}, M = M_{2M_k}, q' = q_{M_k-1}:
//   = (M/q)(sigma_M f - f) + (q'/q)(S_M f - f) + (M/(q M_k^2)) psi_M q' K_{q'}.
struct Divergence2b {
    int k = 0;
    Index q = 0;
    double value = 0.0;        // ||sigma_q f - f||_{1/2}
    double kernel_term = 0.0;  // ||(M/(q M_k^2)) q' K_{q'}||_{1/2}^{1/2}
    double head_term = 0.0;    // (M/q)^{1/2} ||sigma_M f - f||_{1/2}^{1/2}
    double tail_term = 0.0;    // (q'/q)^{1/2} ||S_M f - f||_{1/2}^{1/2}

    // The quasi-triangle lower bound for value^{1/2}.
    double lower_bound() const noexcept { return kernel_term - head_term - tail_term; }
};

Divergence2b divergence_2b(const Construction2b& c, int k);

// The four summands of sigma_q f - f for q = q_{M_k}:
//   (M/q) sigma_M f, (1/q) sum_{j=M+1}^{q} S_j f, -(M/q) f, -(q'/q) f.
std::vector<StepFunction> fejer_split_2b(const Construction2b& c, int k);

// Rows (A; value = int |q_A K_{q_A}|^{1/2} dmu, ratio = value / A).
// Needs N >= 2 A_last + 1 so K_{q_A} is representable.
std::vector<ExperimentRecord> kernel_halfnorm_scan(int A_first, int A_last, const Structure& vs);
double kernel_halfnorm(int A, const Structure& vs);

}  // namespace vilenkin
