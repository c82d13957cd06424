#pragma once

#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

// D_n = sum_{k<n} psi_k, 1 <= n <= M_N.
StepFunction dirichlet_kernel(Index n, const Structure& vs);

// K_n = (1/n) sum_{k=1}^n D_k, 1 <= n <= M_N.
StepFunction fejer_kernel(Index n, const Structure& vs);

// q_A = M_{2A} + M_{2A-2} + ... + M_2 + M_0, needs 2A <= N.
Index q_index(int A, const Structure& vs);

// One cylinder of the Fejer kernel lower-bound catalogue:
// q_{A-1} |K_{q_{A-1}}| >= M_{2k} M_{2s} / 4 on
// I_{2s+1}(low_digit e_{2k} + high_digit e_{2s}).
struct BoundCell {
    int k = 0;
    int s = 0;
    int low_digit = 0;
    int high_digit = 0;
    CellRange cells;
    double bound = 0.0;
};

// Tuples k = 0..A-3, s = k+2..A-1, 1 <= low_digit < m_{2k},
// 1 <= high_digit < m_{2s}.  Empty for A < 3; needs 2A-1 <= N otherwise.
std::vector<BoundCell> bound_cells_3a(int A, const Structure& vs);

struct KernelBoundReport {
    int A = 0;
    Index kernel_index = 0;   // q_{A-1}
    std::size_t entries = 0;  // catalogue size
    Index cells_checked = 0;  // depth-N cells visited over all entries
    std::size_t violations = 0;
    double min_margin = 0.0;  // min over cells of q|K_q| - bound
};

// Checks q_{A-1}|K_{q_{A-1}}| >= bound - tolerance on every depth-N cell of
// every catalogue entry.  Any catalogue can be supplied, so alternative
// index readings can be tested against the same kernel.
KernelBoundReport check_kernel_bound(int A, const Structure& vs, const std::vector<BoundCell>& catalogue,
                                     double tolerance = 1e-9);
KernelBoundReport check_kernel_bound(int A, const Structure& vs, double tolerance = 1e-9);

}  // namespace vilenkin
