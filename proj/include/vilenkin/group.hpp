#pragma once

// Bounded Vilenkin group G_m truncated at a working resolution N.
//
// Two integer encodings are used throughout and must not be confused:
//
//   * character / coefficient indices n = sum_j n_j M_j (digit 0 least
//     significant), the generalized number system;
//   * cell ids of the depth-N cylinders, with coordinate x_0 MOST significant:
//     id = sum_k x_k * (M_N / M_{k+1}).  With this order every cylinder
//     I_n(x) is the contiguous id range [base, base + M_N / M_n).

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace vilenkin {

using Index = std::int64_t;
using Complex = std::complex<double>;

class Structure {
public:
    // `m` must hold at least `resolution` entries, each >= 2; extra entries
    // are ignored.
    Structure(std::vector<int> m, int resolution);

    // m_k = pattern[k % pattern.size()] for k < resolution.
    static Structure repeating(const std::vector<int>& pattern, int resolution);
    static Structure dyadic(int resolution) { return repeating({2}, resolution); }

    int resolution() const noexcept { return resolution_; }
    int radix(int k) const { return m_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& radices() const noexcept { return m_; }

    // M_k for 0 <= k <= N.
    Index block(int k) const { return M_.at(static_cast<std::size_t>(k)); }
    Index cells() const noexcept { return M_.back(); }
    double cell_measure() const noexcept { return 1.0 / static_cast<double>(cells()); }

    // sup of the used m_k.
    int bound() const noexcept { return lambda_; }

    // Weight of coordinate k in a cell id, M_N / M_{k+1}.
    Index stride(int k) const { return stride_.at(static_cast<std::size_t>(k)); }

    // The m_k-th roots of unity exp(2 pi i j / m_k), j < m_k.  Quarter-turn
    // values are stored exactly so m = 2 and m = 4 arithmetic stays in the
    // Gaussian integers.
    std::span<const Complex> roots(int k) const { return roots_.at(static_cast<std::size_t>(k)); }

    friend bool operator==(const Structure& a, const Structure& b) {
        return a.resolution_ == b.resolution_ && a.m_ == b.m_;
    }

private:
    int resolution_;
    std::vector<int> m_;
    std::vector<Index> M_;
    std::vector<Index> stride_;
    std::vector<std::vector<Complex>> roots_;
    int lambda_ = 0;
};

// Throws ValidationError when the two structures differ.
void require_same(const Structure& a, const Structure& b);

struct GroupPoint {
    std::vector<int> digits;  // digits[k] in Z_{m_k}, length N

    friend bool operator==(const GroupPoint&, const GroupPoint&) = default;
};

// Contiguous run of depth-N cell ids.
struct CellRange {
    Index first = 0;
    Index count = 0;

    Index end() const noexcept { return first + count; }
    bool contains(Index cell) const noexcept { return cell >= first && cell < end(); }
    double measure(const Structure& vs) const { return static_cast<double>(count) * vs.cell_measure(); }

    friend bool operator==(const CellRange&, const CellRange&) = default;
};

// Digits of n in the generalized number system (length N).
std::vector<int> index_to_digits(Index n, const Structure& vs);
// Same with an explicit digit count `length` <= N; requires n < M_length.
std::vector<int> index_to_digits(Index n, const Structure& vs, int length);
Index digits_to_index(std::span<const int> digits, const Structure& vs);

// |n| = max{j : n_j != 0}; equivalently M_|n| <= n < M_{|n|+1}.
int leading_position(Index n, const Structure& vs);

GroupPoint zero_point(const Structure& vs);
GroupPoint add_points(const GroupPoint& x, const GroupPoint& y, const Structure& vs);
GroupPoint sub_points(const GroupPoint& x, const GroupPoint& y, const Structure& vs);

// s * e_k: digit s at position k, zeros elsewhere.
GroupPoint basis_point(int k, int s, const Structure& vs);

Index point_to_cell(const GroupPoint& x, const Structure& vs);
GroupPoint cell_to_point(Index cell, const Structure& vs);

// Coordinate k of the point represented by `cell`.
inline int cell_digit(Index cell, int k, const Structure& vs) {
    return static_cast<int>((cell / vs.stride(k)) % vs.radix(k));
}

// Cell-level group difference, (x - y) on cell ids.
Index sub_cells(Index x, Index y, const Structure& vs);

// The depth-N cells forming I_n(x).
CellRange cylinder_cells(const GroupPoint& x, int n, const Structure& vs);

}  // namespace vilenkin
