#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {
namespace {

void check_kernel_index(Index n, const Structure& vs) {
    if (n < 1) throw std::domain_error("kernel index must be >= 1");
    if (n > vs.cells())
        throw ResolutionError("kernel index " + std::to_string(n) + " exceeds M_N = " + std::to_string(vs.cells()));
}

}  // namespace

StepFunction dirichlet_kernel(Index n, const Structure& vs) {
    check_kernel_index(n, vs);
    Spectrum s(vs);
    s.coeffs().head(n).setOnes();
    return synthesize(s);
}

StepFunction fejer_kernel(Index n, const Structure& vs) {
    check_kernel_index(n, vs);
    Spectrum s(vs);
    s.coeffs().head(n).setOnes();
    return synthesize(fejer_spectrum(s, n));
}

Index q_index(int A, const Structure& vs) {
    if (A < 0) throw ValidationError("q_A needs A >= 0");
    if (2 * A > vs.resolution())
        throw ResolutionError("q_" + std::to_string(A) + " needs resolution >= " + std::to_string(2 * A));
    Index q = 0;
    for (int i = 0; i <= A; ++i) q += vs.block(2 * i);
    return q;
}

std::vector<BoundCell> bound_cells_3a(int A, const Structure& vs) {
    std::vector<BoundCell> out;
    if (A < 3) return out;
    if (2 * A - 1 > vs.resolution())
        throw ResolutionError("kernel bound catalogue for A = " + std::to_string(A) + " needs resolution >= " +
                              std::to_string(2 * A - 1));
    for (int k = 0; k <= A - 3; ++k)
        for (int s = k + 2; s <= A - 1; ++s)
            for (int lo = 1; lo < vs.radix(2 * k); ++lo)
                for (int hi = 1; hi < vs.radix(2 * s); ++hi) {
                    GroupPoint x = zero_point(vs);
                    x.digits[static_cast<std::size_t>(2 * k)] = lo;
                    x.digits[static_cast<std::size_t>(2 * s)] = hi;
                    const double bound =
                        static_cast<double>(vs.block(2 * k)) * static_cast<double>(vs.block(2 * s)) / 4.0;
                    out.push_back(BoundCell{k, s, lo, hi, cylinder_cells(x, 2 * s + 1, vs), bound});
                }
    return out;
}

KernelBoundReport check_kernel_bound(int A, const Structure& vs, const std::vector<BoundCell>& catalogue,
                                     double tolerance) {
    KernelBoundReport report;
    report.A = A;
    report.entries = catalogue.size();
    report.min_margin = std::numeric_limits<double>::infinity();
    if (catalogue.empty()) return report;

    report.kernel_index = q_index(A - 1, vs);
    const StepFunction kernel = fejer_kernel(report.kernel_index, vs);
    const double q = static_cast<double>(report.kernel_index);
    for (const auto& entry : catalogue) {
        for (Index cell = entry.cells.first; cell < entry.cells.end(); ++cell) {
            const double margin = q * std::abs(kernel[cell]) - entry.bound;
            report.min_margin = std::min(report.min_margin, margin);
            if (margin < -tolerance) ++report.violations;
            ++report.cells_checked;
        }
    }
    return report;
}

KernelBoundReport check_kernel_bound(int A, const Structure& vs, double tolerance) {
    return check_kernel_bound(A, vs, bound_cells_3a(A, vs), tolerance);
}

}  // namespace vilenkin
