#pragma once

// Brute-force reference implementations.  Everything here works from the
// definitions directly (digit loops, std::polar, O(M^2) sums) and shares no
// code path with the library beyond Structure's digit bookkeeping.

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "vilenkin/group.hpp"

namespace vilenkin::oracle {

// Coordinate k of a cell, recomputed from M_N / M_{k+1} without stride().
inline int digit_of_cell(Index cell, int k, const Structure& vs) {
    const Index weight = vs.cells() / vs.block(k + 1);
    return static_cast<int>((cell / weight) % vs.radix(k));
}

inline std::vector<int> digits_of_index(Index n, const Structure& vs) {
    std::vector<int> d(static_cast<std::size_t>(vs.resolution()));
    for (int j = 0; j < vs.resolution(); ++j) {
        d[static_cast<std::size_t>(j)] = static_cast<int>(n % vs.radix(j));
        n /= vs.radix(j);
    }
    return d;
}

// psi_n(x) = exp(2 pi i sum_k n_k x_k / m_k).
inline Complex character(Index n, Index cell, const Structure& vs) {
    const auto nd = digits_of_index(n, vs);
    double turns = 0.0;
    for (int k = 0; k < vs.resolution(); ++k)
        turns += static_cast<double>(nd[static_cast<std::size_t>(k)] * digit_of_cell(cell, k, vs)) / vs.radix(k);
    turns -= std::floor(turns);
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline Eigen::VectorXcd character_column(Index n, const Structure& vs) {
    Eigen::VectorXcd v(vs.cells());
    for (Index x = 0; x < vs.cells(); ++x) v[x] = character(n, x, vs);
    return v;
}

inline Eigen::MatrixXcd character_matrix(const Structure& vs) {
    Eigen::MatrixXcd psi(vs.cells(), vs.cells());
    for (Index n = 0; n < vs.cells(); ++n) psi.col(n) = character_column(n, vs);
    return psi;
}

inline Complex coefficient(const Eigen::VectorXcd& values, Index n, const Structure& vs) {
    Complex acc = 0.0;
    for (Index x = 0; x < vs.cells(); ++x) acc += values[x] * std::conj(character(n, x, vs));
    return acc / static_cast<double>(vs.cells());
}

// Column by column so M_N = 4096 stays within memory.
inline Eigen::VectorXcd analyze(const Eigen::VectorXcd& values, const Structure& vs) {
    Eigen::VectorXcd out(vs.cells());
    for (Index n = 0; n < vs.cells(); ++n)
        out[n] = character_column(n, vs).dot(values) / static_cast<double>(vs.cells());
    return out;
}

inline Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coeffs, const Structure& vs) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(vs.cells());
    for (Index n = 0; n < vs.cells(); ++n)
        if (coeffs[n] != Complex{}) out += coeffs[n] * character_column(n, vs);
    return out;
}

// Weighted character sum sum_k w_k psi_k with w given per index.
template <class Weight>
Eigen::VectorXcd character_sum(Index count, const Structure& vs, Weight w) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(vs.cells());
    for (Index k = 0; k < count; ++k) {
        const double c = w(k);
        if (c != 0.0) out += c * character_column(k, vs);
    }
    return out;
}

inline Eigen::VectorXcd dirichlet(Index n, const Structure& vs) {
    return character_sum(n, vs, [](Index) { return 1.0; });
}

// K_n = sum_{k<n} (1 - k/n) psi_k.
inline Eigen::VectorXcd fejer(Index n, const Structure& vs) {
    const double nn = static_cast<double>(n);
    return character_sum(n, vs, [nn](Index k) { return 1.0 - static_cast<double>(k) / nn; });
}

// sigma_n f = (1/n) sum_{k=1}^n S_k f, S_k from the coefficient list.
inline Eigen::VectorXcd fejer_mean(const Eigen::VectorXcd& coeffs, Index n, const Structure& vs) {
    Eigen::VectorXcd partial = Eigen::VectorXcd::Zero(vs.cells());
    Eigen::VectorXcd total = Eigen::VectorXcd::Zero(vs.cells());
    for (Index k = 1; k <= n; ++k) {
        if (coeffs[k - 1] != Complex{}) partial += coeffs[k - 1] * character_column(k - 1, vs);
        total += partial;
    }
    return total / static_cast<double>(n);
}

// E(f | F_n): average over cells sharing the first n coordinates.
inline Eigen::VectorXcd conditional_expectation(const Eigen::VectorXcd& values, int n, const Structure& vs) {
    std::vector<Complex> sums(static_cast<std::size_t>(vs.block(n)));
    std::vector<Index> counts(sums.size());
    auto key = [&](Index x) {
        Index id = 0;
        for (int k = 0; k < n; ++k) id = id * vs.radix(k) + digit_of_cell(x, k, vs);
        return static_cast<std::size_t>(id);
    };
    for (Index x = 0; x < vs.cells(); ++x) {
        sums[key(x)] += values[x];
        ++counts[key(x)];
    }
    Eigen::VectorXcd out(vs.cells());
    for (Index x = 0; x < vs.cells(); ++x) out[x] = sums[key(x)] / static_cast<double>(counts[key(x)]);
    return out;
}

inline Eigen::VectorXd maximal(const Eigen::VectorXcd& values, const Structure& vs) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(vs.cells());
    for (int n = 0; n <= vs.resolution(); ++n)
        out = out.cwiseMax(conditional_expectation(values, n, vs).cwiseAbs());
    return out;
}

inline double lp(const Eigen::VectorXd& magnitudes, double p) {
    double acc = 0.0;
    for (Index i = 0; i < magnitudes.size(); ++i) acc += std::pow(magnitudes[i], p);
    return std::pow(acc / static_cast<double>(magnitudes.size()), 1.0 / p);
}

// sup_lambda lambda^p mu(|f| > lambda) by scanning every achieved value.
inline double weak_powered(const Eigen::VectorXd& magnitudes, double p) {
    double best = 0.0;
    for (Index i = 0; i < magnitudes.size(); ++i) {
        const double v = magnitudes[i];
        if (v <= 0.0) continue;
        const double mu = static_cast<double>((magnitudes.array() >= v).count()) / static_cast<double>(magnitudes.size());
        best = std::max(best, std::pow(v, p) * mu);
    }
    return best;
}

}  // namespace vilenkin::oracle
