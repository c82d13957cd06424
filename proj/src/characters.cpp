#include "vilenkin/characters.hpp"

#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {

Complex rademacher(int k, const GroupPoint& x, const Structure& vs) {
    if (k < 0 || k >= vs.resolution())
        throw ResolutionError("Rademacher index " + std::to_string(k) + " >= N");
    const int xk = x.digits.at(static_cast<std::size_t>(k));
    if (xk < 0 || xk >= vs.radix(k)) throw ValidationError("digit outside Z_m");
    return vs.roots(k)[static_cast<std::size_t>(xk)];
}

Complex character(Index n, const GroupPoint& x, const Structure& vs) {
    const auto n_digits = index_to_digits(n, vs);
    Complex out{1.0, 0.0};
    for (int k = 0; k < vs.resolution(); ++k) {
        const int nk = n_digits[static_cast<std::size_t>(k)];
        if (nk == 0) continue;
        const int xk = x.digits.at(static_cast<std::size_t>(k));
        out *= vs.roots(k)[static_cast<std::size_t>((nk * xk) % vs.radix(k))];
    }
    return out;
}

Eigen::VectorXcd character_values(Index n, const Structure& vs) {
    const auto n_digits = index_to_digits(n, vs);
    Eigen::VectorXcd out = Eigen::VectorXcd::Ones(vs.cells());
    for (int k = 0; k < vs.resolution(); ++k) {
        const int nk = n_digits[static_cast<std::size_t>(k)];
        if (nk == 0) continue;
        const auto roots = vs.roots(k);
        const int m = vs.radix(k);
        for (Index cell = 0; cell < vs.cells(); ++cell)
            out[cell] *= roots[static_cast<std::size_t>((nk * cell_digit(cell, k, vs)) % m)];
    }
    return out;
}

}  // namespace vilenkin
