#pragma once

// Step functions at resolution N, their Vilenkin-Fourier spectra, and the
// operators built from them (partial sums, Fejer means, conditional
// expectations, maximal operators).
//
// Haar measure is normalized: integrals are (1/M_N) * sum over cells, and
// coefficient j of f is (1/M_N) sum_x f(x) conj(psi_j(x)).

#include <functional>

#include <Eigen/Dense>

#include "vilenkin/group.hpp"

namespace vilenkin {

class StepFunction {
public:
    explicit StepFunction(Structure vs);
    StepFunction(Structure vs, Eigen::VectorXcd values);

    const Structure& structure() const noexcept { return vs_; }
    const Eigen::VectorXcd& values() const noexcept { return values_; }
    Eigen::VectorXcd& values() noexcept { return values_; }
    Index size() const noexcept { return values_.size(); }

    Complex operator[](Index cell) const { return values_[cell]; }
    Complex& operator[](Index cell) { return values_[cell]; }

    Complex integral() const { return values_.mean(); }
    double sup_norm() const { return values_.size() ? values_.cwiseAbs().maxCoeff() : 0.0; }

    StepFunction& operator+=(const StepFunction& rhs);
    StepFunction& operator-=(const StepFunction& rhs);
    StepFunction& operator*=(Complex c) {
        values_ *= c;
        return *this;
    }

private:
    Structure vs_;
    Eigen::VectorXcd values_;
};

StepFunction operator+(StepFunction lhs, const StepFunction& rhs);
StepFunction operator-(StepFunction lhs, const StepFunction& rhs);
StepFunction operator*(Complex c, StepFunction f);

class Spectrum {
public:
    explicit Spectrum(Structure vs);
    Spectrum(Structure vs, Eigen::VectorXcd coeffs);

    const Structure& structure() const noexcept { return vs_; }
    const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
    Eigen::VectorXcd& coeffs() noexcept { return coeffs_; }
    Index size() const noexcept { return coeffs_.size(); }

    Complex operator[](Index j) const { return coeffs_[j]; }
    Complex& operator[](Index j) { return coeffs_[j]; }

    Spectrum& operator+=(const Spectrum& rhs);
    Spectrum& operator-=(const Spectrum& rhs);
    Spectrum& operator*=(Complex c) {
        coeffs_ *= c;
        return *this;
    }

private:
    Structure vs_;
    Eigen::VectorXcd coeffs_;
};

Spectrum operator+(Spectrum lhs, const Spectrum& rhs);
Spectrum operator-(Spectrum lhs, const Spectrum& rhs);
Spectrum operator*(Complex c, Spectrum s);

// Fast mixed-radix analysis: one length-m_k DFT stage per coordinate,
// stages in ascending k, followed by a digit-reversal permutation from
// cell order to coefficient order.  Cost O(M_N * sum_k m_k).
Spectrum analyze(const StepFunction& f);
StepFunction synthesize(const Spectrum& s);

// Coefficients j >= n zeroed.  S_0 = 0.
Spectrum truncate_below(const Spectrum& s, Index n);
// Coefficients j < n zeroed (the tail f - S_n f).
Spectrum tail_from(const Spectrum& s, Index n);

// S_n f.
StepFunction partial_sum(const Spectrum& s, Index n);

// sum_{j=first+1}^{last} S_j f, through spectrum weights: coefficient t
// is counted last - max(first, t) times for t < last.
StepFunction partial_sum_total(const Spectrum& s, Index first, Index last);

// Spectrum of sigma_n f: coefficient j scaled by (1 - j/n) for j < n.
Spectrum fejer_spectrum(const Spectrum& s, Index n);
StepFunction fejer_mean(const Spectrum& s, Index n);

// (f * g)(x) = (1/M_N) sum_t f(t) g(x - t), through the transform.
StepFunction convolve(const StepFunction& f, const StepFunction& g);

// f^(n) = E(f | F_n) = S_{M_n} f.
StepFunction condexp(const Spectrum& s, int n);
// Independent route to f^(n): average f over every cylinder of depth n.
StepFunction block_average(const StepFunction& f, int n);

// f* = max_{0<=n<=N} |f^(n)|, real-valued (stored as complex with zero
// imaginary part).
StepFunction maximal_function(const Spectrum& s);

// Weight (n+1)^{1/p-2} log^{2[1/2+p]}(n+1) of the weighted Fejer maximal
// operator, natural logarithm.
struct MaximalWeight {
    explicit MaximalWeight(double p);

    double p;
    double exponent;  // 1/p - 2
    int log_power;    // 2 * floor(1/2 + p)

    double operator()(Index n) const;
};

// Calls visit(n, sigma_n f values) for n = 1..n_max in increasing order.
// Runs the recursion S_n = S_{n-1} + c_{n-1} psi_{n-1},
// sigma_n = (1/n) sum_{k<=n} S_k, so each step costs O(M_N) plus one
// character evaluation per nonzero coefficient.
void for_each_fejer_mean(const Spectrum& s, Index n_max,
                         const std::function<void(Index, const Eigen::VectorXcd&)>& visit);

// sup_{1<=n<=n_max} |sigma_n f| / weight(n), pointwise.
StepFunction weighted_maximal_fejer(const Spectrum& s, double p, Index n_max);

}  // namespace vilenkin
