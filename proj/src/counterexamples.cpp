#include "vilenkin/counterexamples.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "vilenkin/characters.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/kernels.hpp"

namespace vilenkin {
namespace {

// M_{k+1} 1_{I_{k+1}} - M_k 1_{I_k}.
StepFunction dirichlet_step(int k, const Structure& vs) {
    return dirichlet_kernel(vs.block(k + 1), vs) - dirichlet_kernel(vs.block(k), vs);
}

double weak_root(const StepFunction& f, double p) { return weak_lp_quasinorm(f, p).root; }

double half_power_norm(const StepFunction& f) {
    // ||f||_{1/2}^{1/2} = int |f|^{1/2} dmu
    return f.values().cwiseAbs().array().sqrt().mean();
}

Index as_index(int v) { return static_cast<Index>(v); }

}  // namespace

StepFunction atom_2a(int k, double p, const Structure& vs) {
    if (k < 0 || k + 1 > vs.resolution())
        throw ResolutionError("atom a_" + std::to_string(k) + " needs resolution >= " + std::to_string(k + 1));
    const double scale = std::pow(static_cast<double>(vs.block(k)), 1.0 / p - 1.0) / vs.bound();
    return scale * dirichlet_step(k, vs);
}

AtomInterval atom_2a_interval(int k, const Structure& vs) { return AtomInterval{zero_point(vs), k}; }

Construction2a build_2a(double p, int A, const Structure& vs) {
    if (!(p > 0.0 && p < 0.5)) throw ValidationError("the 2a construction needs 0 < p < 1/2 (p = 1/2 is build_2b)");
    if (A < 0) throw ValidationError("truncation level must be >= 0");
    if (A + 1 > vs.resolution())
        throw CapacityError("construction 2a with A = " + std::to_string(A) + " needs resolution N >= " +
                                std::to_string(A + 1),
                            A + 1);
    AtomicDecomposition d;
    d.p = p;
    StepFunction f(vs);
    for (int i = 0; i <= A; ++i) {
        const double mu = vs.bound() / std::pow(static_cast<double>(vs.block(i)), 1.0 / p - 2.0);
        d.atoms.push_back(atom_2a(i, p, vs));
        d.intervals.push_back(atom_2a_interval(i, vs));
        d.coefficients.push_back(mu);
        f += mu * d.atoms.back();
    }
    return Construction2a{p, A, vs, analyze(f), std::move(d)};
}

std::vector<ExperimentRecord> modulus_report_2a(const Construction2a& c, int n_first, int n_last) {
    std::vector<ExperimentRecord> rows;
    const double exponent = 1.0 / c.p - 2.0;
    for (int n = n_first; n <= n_last; ++n) {
        const double omega = modulus_of_continuity(c.spectrum, n, c.p);
        const double bound = std::pow(static_cast<double>(c.vs.block(n)), -exponent);
        double tail = 0.0;
        for (int i = n; i <= c.A; ++i) tail += std::pow(static_cast<double>(c.vs.block(i)), -exponent);
        rows.push_back(ExperimentRecord{"counterexample-2a",
                                        {{"n", as_index(n)}},
                                        {{"omega", omega}, {"bound", bound}, {"ratio", omega / bound}, {"tail_sum", tail}}});
    }
    return rows;
}

Divergence2a divergence_2a(const Construction2a& c, int k) {
    if (k < 0 || k >= c.A) throw std::out_of_range("divergence_2a needs 0 <= k < A");
    const Structure& vs = c.vs;
    const Index Mk = vs.block(k);
    const double share = static_cast<double>(Mk) / static_cast<double>(Mk + 1);
    const StepFunction f = synthesize(c.spectrum);

    Divergence2a out;
    out.k = k;
    const StepFunction diff = fejer_mean(c.spectrum, Mk + 1) - f;
    const WeakNorm w = weak_lp_quasinorm(diff, c.p);
    out.value = w.root;
    out.powered = w.powered;

    const StepFunction dyadic = fejer_mean(c.spectrum, Mk) - f;
    out.lp_fejer_dyadic = lp_quasinorm(dyadic, c.p);
    out.head = weak_root(share * dyadic, c.p);
    out.tail = weak_root((1.0 / static_cast<double>(Mk + 1)) * (partial_sum(c.spectrum, Mk) - f), c.p);
    out.dominant = weak_root(StepFunction(vs, share * character_values(Mk, vs)), c.p);
    return out;
}

int required_resolution_2b(int A, const Structure& vs) {
    if (A < 1) throw ValidationError("the 2b construction needs A >= 1");
    if (A > vs.resolution())
        throw CapacityError("construction 2b with A = " + std::to_string(A) + " needs M_A beyond the resolution", A);
    const Index need = 2 * vs.block(A) + 1;
    if (need > 62) throw CapacityError("construction 2b with A = " + std::to_string(A) + " needs N = " +
                                           std::to_string(need) + ", beyond 64-bit cell ids",
                                       static_cast<int>(std::min<Index>(need, INT_MAX)));
    return static_cast<int>(need);
}

StepFunction atom_2b(int i, const Structure& vs) {
    if (i < 1 || i > vs.resolution()) throw ValidationError("atom index out of range");
    const Index level = 2 * vs.block(i);
    if (level + 1 > vs.resolution())
        throw CapacityError("atom b_" + std::to_string(i) + " needs resolution N >= " + std::to_string(level + 1),
                            static_cast<int>(level + 1));
    const int j = static_cast<int>(level);
    const double scale = static_cast<double>(vs.block(j)) / vs.bound();
    return scale * dirichlet_step(j, vs);
}

AtomInterval atom_2b_interval(int i, const Structure& vs) {
    return AtomInterval{zero_point(vs), static_cast<int>(2 * vs.block(i))};
}

Construction2b build_2b(int A, const Structure& vs) {
    const int need = required_resolution_2b(A, vs);
    if (vs.resolution() < need)
        throw CapacityError("construction 2b with A = " + std::to_string(A) + " needs resolution N = 2M_A + 1 = " +
                                std::to_string(need) + " (have " + std::to_string(vs.resolution()) + ")",
                            need);
    AtomicDecomposition d;
    d.p = 0.5;
    StepFunction f(vs);
    for (int i = 1; i <= A; ++i) {
        const double Mi = static_cast<double>(vs.block(i));
        const double mu = vs.bound() / (Mi * Mi);
        d.atoms.push_back(atom_2b(i, vs));
        d.intervals.push_back(atom_2b_interval(i, vs));
        d.coefficients.push_back(mu);
        f += mu * d.atoms.back();
    }
    return Construction2b{A, vs, analyze(f), std::move(d)};
}

std::vector<ExperimentRecord> modulus_report_2b(const Construction2b& c, int n_first, int n_last) {
    std::vector<ExperimentRecord> rows;
    for (int n = std::max(n_first, 1); n <= n_last; ++n) {
        const double omega = modulus_of_continuity(c.spectrum, n, 0.5);
        const double bound = 1.0 / (static_cast<double>(n) * n);
        rows.push_back(ExperimentRecord{
            "counterexample-2b", {{"n", as_index(n)}}, {{"omega", omega}, {"bound", bound}, {"ratio", omega / bound}}});
    }
    return rows;
}

std::vector<StepFunction> fejer_split_2b(const Construction2b& c, int k) {
    const Structure& vs = c.vs;
    if (k < 1 || k > c.A) throw std::out_of_range("fejer_split_2b needs 1 <= k <= A");
    const int depth = static_cast<int>(2 * vs.block(k));
    const Index M = vs.block(depth);
    const Index q = q_index(static_cast<int>(vs.block(k)), vs);
    const Index q_prev = q - M;
    const double qd = static_cast<double>(q);
    const StepFunction f = synthesize(c.spectrum);
    std::vector<StepFunction> out;
    out.push_back((static_cast<double>(M) / qd) * fejer_mean(c.spectrum, M));
    out.push_back((1.0 / qd) * partial_sum_total(c.spectrum, M, q));
    out.push_back((-static_cast<double>(M) / qd) * f);
    out.push_back((-static_cast<double>(q_prev) / qd) * f);
    return out;
}

Divergence2b divergence_2b(const Construction2b& c, int k) {
    const Structure& vs = c.vs;
    if (k < 1 || k > c.A) throw std::out_of_range("divergence_2b needs 1 <= k <= A");
    const int half = static_cast<int>(vs.block(k));
    if (2 * half + 1 > vs.resolution())
        throw CapacityError("q_{M_k} for k = " + std::to_string(k) + " exceeds M_N; need resolution " +
                                std::to_string(2 * half + 1),
                            2 * half + 1);
    const Index M = vs.block(2 * half);
    const Index q = q_index(half, vs);
    const Index q_prev = q - M;
    const double qd = static_cast<double>(q);
    const double Mk = static_cast<double>(vs.block(k));
    const StepFunction f = synthesize(c.spectrum);

    Divergence2b out;
    out.k = k;
    out.q = q;
    const StepFunction diff = fejer_mean(c.spectrum, q) - f;
    const double half_norm = half_power_norm(diff);
    out.value = half_norm * half_norm;

    const double coef = static_cast<double>(M) / (qd * Mk * Mk);
    const StepFunction kernel = static_cast<double>(q_prev) * fejer_kernel(q_prev, vs);
    out.kernel_term = std::sqrt(coef) * half_power_norm(kernel);
    out.head_term = std::sqrt(static_cast<double>(M) / qd) * half_power_norm(fejer_mean(c.spectrum, M) - f);
    out.tail_term = std::sqrt(static_cast<double>(q_prev) / qd) * half_power_norm(partial_sum(c.spectrum, M) - f);
    return out;
}

double kernel_halfnorm(int A, const Structure& vs) {
    if (2 * A + 1 > vs.resolution())
        throw ResolutionError("K_{q_" + std::to_string(A) + "} needs resolution >= " + std::to_string(2 * A + 1));
    const Index q = q_index(A, vs);
    const StepFunction scaled = static_cast<double>(q) * fejer_kernel(q, vs);
    return half_power_norm(scaled);
}

std::vector<ExperimentRecord> kernel_halfnorm_scan(int A_first, int A_last, const Structure& vs) {
    std::vector<ExperimentRecord> rows;
    for (int A = A_first; A <= A_last; ++A) {
        const double value = kernel_halfnorm(A, vs);
        rows.push_back(ExperimentRecord{"kernel-scan",
                                        {{"A", as_index(A)}},
                                        {{"value", value}, {"ratio", A > 0 ? value / A : 0.0}}});
    }
    return rows;
}

}  // namespace vilenkin
