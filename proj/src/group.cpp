#include "vilenkin/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {
namespace {

std::vector<Complex> unit_roots(int m) {
    std::vector<Complex> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        if ((4 * j) % m == 0) {
            constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            out[static_cast<std::size_t>(j)] = quarter[(4 * j) / m];
        } else {
            const double angle = 2.0 * std::numbers::pi * j / m;
            out[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
        }
    }
    return out;
}

void check_point(const GroupPoint& x, const Structure& vs) {
    if (static_cast<int>(x.digits.size()) != vs.resolution())
        throw ValidationError("group point has " + std::to_string(x.digits.size()) +
                              " digits, structure resolution is " + std::to_string(vs.resolution()));
    for (int k = 0; k < vs.resolution(); ++k) {
        const int d = x.digits[static_cast<std::size_t>(k)];
        if (d < 0 || d >= vs.radix(k))
            throw ValidationError("digit " + std::to_string(d) + " at position " + std::to_string(k) +
                                  " outside Z_" + std::to_string(vs.radix(k)));
    }
}

}  // namespace

Structure::Structure(std::vector<int> m, int resolution) : resolution_(resolution) {
    if (resolution < 0) throw ValidationError("negative resolution");
    if (static_cast<int>(m.size()) < resolution)
        throw ValidationError("generating sequence shorter than resolution " + std::to_string(resolution));
    m.resize(static_cast<std::size_t>(resolution));
    m_ = std::move(m);

    M_.assign(static_cast<std::size_t>(resolution) + 1, 1);
    for (int k = 0; k < resolution; ++k) {
        const int mk = m_[static_cast<std::size_t>(k)];
        if (mk < 2) throw ValidationError("m_" + std::to_string(k) + " = " + std::to_string(mk) + " < 2");
        if (M_[static_cast<std::size_t>(k)] > std::numeric_limits<Index>::max() / mk)
            throw CapacityError("M_" + std::to_string(k + 1) + " overflows 64-bit indices", k + 1);
        M_[static_cast<std::size_t>(k) + 1] = M_[static_cast<std::size_t>(k)] * mk;
        lambda_ = std::max(lambda_, mk);
    }

    stride_.resize(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k)
        stride_[static_cast<std::size_t>(k)] = M_.back() / M_[static_cast<std::size_t>(k) + 1];

    roots_.reserve(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k) roots_.push_back(unit_roots(m_[static_cast<std::size_t>(k)]));
}

Structure Structure::repeating(const std::vector<int>& pattern, int resolution) {
    if (pattern.empty()) throw ValidationError("empty m pattern");
    std::vector<int> m(static_cast<std::size_t>(std::max(resolution, 0)));
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = pattern[k % pattern.size()];
    return Structure(std::move(m), resolution);
}

void require_same(const Structure& a, const Structure& b) {
    if (!(a == b)) throw ValidationError("operands live on different Vilenkin structures");
}

std::vector<int> index_to_digits(Index n, const Structure& vs) {
    return index_to_digits(n, vs, vs.resolution());
}

std::vector<int> index_to_digits(Index n, const Structure& vs, int length) {
    if (length < 0 || length > vs.resolution())
        throw ResolutionError("digit length " + std::to_string(length) + " exceeds resolution");
    if (n < 0 || n >= vs.block(length))
        throw std::out_of_range("index " + std::to_string(n) + " outside [0, M_" + std::to_string(length) + ")");
    std::vector<int> digits(static_cast<std::size_t>(length));
    for (int j = 0; j < length; ++j) {
        digits[static_cast<std::size_t>(j)] = static_cast<int>(n % vs.radix(j));
        n /= vs.radix(j);
    }
    return digits;
}

Index digits_to_index(std::span<const int> digits, const Structure& vs) {
    if (static_cast<int>(digits.size()) > vs.resolution())
        throw ResolutionError("more digits than the resolution");
    Index n = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const int d = digits[j];
        if (d < 0 || d >= vs.radix(static_cast<int>(j)))
            throw ValidationError("digit " + std::to_string(d) + " at position " + std::to_string(j) + " out of range");
        n += d * vs.block(static_cast<int>(j));
    }
    return n;
}

int leading_position(Index n, const Structure& vs) {
    if (n <= 0) throw std::domain_error("|n| is undefined for n = 0");
    if (n >= vs.cells()) throw std::out_of_range("index beyond M_N");
    int j = 0;
    while (vs.block(j + 1) <= n) ++j;
    return j;
}

GroupPoint zero_point(const Structure& vs) {
    return GroupPoint{std::vector<int>(static_cast<std::size_t>(vs.resolution()), 0)};
}

GroupPoint add_points(const GroupPoint& x, const GroupPoint& y, const Structure& vs) {
    check_point(x, vs);
    check_point(y, vs);
    GroupPoint out = x;
    for (int k = 0; k < vs.resolution(); ++k) {
        auto& d = out.digits[static_cast<std::size_t>(k)];
        d = (d + y.digits[static_cast<std::size_t>(k)]) % vs.radix(k);
    }
    return out;
}

GroupPoint sub_points(const GroupPoint& x, const GroupPoint& y, const Structure& vs) {
    check_point(x, vs);
    check_point(y, vs);
    GroupPoint out = x;
    for (int k = 0; k < vs.resolution(); ++k) {
        auto& d = out.digits[static_cast<std::size_t>(k)];
        d = (d - y.digits[static_cast<std::size_t>(k)] + vs.radix(k)) % vs.radix(k);
    }
    return out;
}

GroupPoint basis_point(int k, int s, const Structure& vs) {
    if (k < 0 || k >= vs.resolution()) throw ResolutionError("basis position " + std::to_string(k) + " >= N");
    if (s < 1 || s >= vs.radix(k))
        throw ValidationError("basis multiplier " + std::to_string(s) + " outside 1.." + std::to_string(vs.radix(k) - 1));
    GroupPoint out = zero_point(vs);
    out.digits[static_cast<std::size_t>(k)] = s;
    return out;
}

Index point_to_cell(const GroupPoint& x, const Structure& vs) {
    check_point(x, vs);
    Index cell = 0;
    for (int k = 0; k < vs.resolution(); ++k) cell += x.digits[static_cast<std::size_t>(k)] * vs.stride(k);
    return cell;
}

GroupPoint cell_to_point(Index cell, const Structure& vs) {
    if (cell < 0 || cell >= vs.cells()) throw std::out_of_range("cell id outside [0, M_N)");
    GroupPoint out = zero_point(vs);
    for (int k = 0; k < vs.resolution(); ++k) out.digits[static_cast<std::size_t>(k)] = cell_digit(cell, k, vs);
    return out;
}

Index sub_cells(Index x, Index y, const Structure& vs) {
    Index out = 0;
    for (int k = 0; k < vs.resolution(); ++k) {
        const int m = vs.radix(k);
        out += ((cell_digit(x, k, vs) - cell_digit(y, k, vs) + m) % m) * vs.stride(k);
    }
    return out;
}

CellRange cylinder_cells(const GroupPoint& x, int n, const Structure& vs) {
    if (n < 0 || n > vs.resolution())
        throw ResolutionError("cylinder depth " + std::to_string(n) + " exceeds resolution " +
                              std::to_string(vs.resolution()));
    check_point(x, vs);
    Index first = 0;
    for (int k = 0; k < n; ++k) first += x.digits[static_cast<std::size_t>(k)] * vs.stride(k);
    return CellRange{first, vs.cells() / vs.block(n)};
}

}  // namespace vilenkin
