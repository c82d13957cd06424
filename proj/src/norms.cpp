#include "vilenkin/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {
namespace {

void check_p(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ValidationError("quasinorm exponent p must be a positive finite number");
}

// Magnitudes sorted descending; ties keep cell order.
std::vector<std::pair<double, Index>> sorted_magnitudes(const StepFunction& f) {
    std::vector<std::pair<double, Index>> mags;
    mags.reserve(static_cast<std::size_t>(f.size()));
    for (Index c = 0; c < f.size(); ++c) mags.emplace_back(std::abs(f[c]), c);
    std::stable_sort(mags.begin(), mags.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return mags;
}

}  // namespace

double lp_quasinorm(const StepFunction& f, double p) {
    check_p(p);
    double acc = 0.0;
    for (Index c = 0; c < f.size(); ++c) acc += std::pow(std::abs(f[c]), p);
    return std::pow(acc * f.structure().cell_measure(), 1.0 / p);
}

std::vector<LevelSet> distribution(const StepFunction& f) {
    const auto mags = sorted_magnitudes(f);
    const double cell = f.structure().cell_measure();
    std::vector<LevelSet> out;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        const double v = mags[i].first;
        if (v <= 0.0) break;
        if (i + 1 < mags.size() && mags[i + 1].first == v) continue;
        out.push_back(LevelSet{v, static_cast<double>(i + 1) * cell});
    }
    return out;
}

WeakNorm weak_lp_quasinorm(const StepFunction& f, double p) {
    check_p(p);
    WeakNorm out;
    for (const auto& level : distribution(f)) {
        const double candidate = std::pow(level.magnitude, p) * level.measure;
        if (candidate > out.powered) {
            out.powered = candidate;
            out.magnitude = level.magnitude;
        }
    }
    out.root = std::pow(out.powered, 1.0 / p);
    return out;
}

double hardy_norm(const Spectrum& s, double p) {
    check_p(p);
    return lp_quasinorm(maximal_function(s), p);
}

double modulus_of_continuity(const Spectrum& s, int n, double p) {
    if (n < 0 || n > s.structure().resolution())
        throw ResolutionError("modulus level " + std::to_string(n) + " exceeds resolution");
    return hardy_norm(tail_from(s, s.structure().block(n)), p);
}

NormReport norm_report(const StepFunction& f, double p) {
    NormReport r;
    r.p = p;
    r.lp = lp_quasinorm(f, p);
    r.weak = weak_lp_quasinorm(f, p);
    r.levels = distribution(f);
    return r;
}

NormReport norm_report(const Spectrum& s, double p) {
    NormReport r = norm_report(synthesize(s), p);
    r.hardy = hardy_norm(s, p);
    return r;
}

AtomCertificate validate_atom(const StepFunction& a, double p, const AtomInterval& interval) {
    check_p(p);
    const Structure& vs = a.structure();
    const CellRange range = cylinder_cells(interval.base, interval.depth, vs);
    AtomCertificate cert;
    cert.interval = interval;

    const double sup = a.sup_norm();
    const double tol = 1e-12 * sup;

    const Complex inside = a.values().segment(range.first, range.count).sum() * vs.cell_measure();
    cert.mean_residual = std::abs(inside);
    cert.zero_mean = cert.mean_residual <= tol;

    double outside = 0.0;
    for (Index c = 0; c < a.size(); ++c)
        if (!range.contains(c)) outside = std::max(outside, std::abs(a[c]));
    cert.outside_max = outside;
    cert.support = outside <= tol;

    cert.sup_ratio = sup * std::pow(range.measure(vs), 1.0 / p);
    cert.sup_bound = cert.sup_ratio <= 1.0 + 1e-12;
    return cert;
}

Assembly assemble_from_atoms(const AtomicDecomposition& d, int n, const Structure& vs) {
    if (d.coefficients.size() != d.atoms.size() || d.atoms.size() != d.intervals.size())
        throw ValidationError("atomic decomposition has mismatched coefficient/atom/interval counts");
    if (n < 0 || n > vs.resolution()) throw ResolutionError("assembly level exceeds resolution");
    Assembly out{StepFunction(vs), 0.0, {}};
    double power_sum = 0.0;
    for (std::size_t k = 0; k < d.atoms.size(); ++k) {
        const StepFunction& atom = d.atoms[k];
        require_same(atom.structure(), vs);
        if (!validate_atom(atom, d.p, d.intervals[k]).valid()) out.invalid.push_back(k);
        out.level += d.coefficients[k] * block_average(atom, n);
        power_sum += std::pow(std::abs(d.coefficients[k]), d.p);
    }
    out.coefficient_bound = std::pow(power_sum, 1.0 / d.p);
    return out;
}

}  // namespace vilenkin
