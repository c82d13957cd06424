#include "vilenkin/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vilenkin/characters.hpp"
#include "vilenkin/errors.hpp"

namespace vilenkin {
namespace {

void check_length(const Structure& vs, Index n, const char* what) {
    if (n != vs.cells())
        throw ValidationError(std::string(what) + " length " + std::to_string(n) + " != M_N = " +
                              std::to_string(vs.cells()));
}

void check_index(const Structure& vs, Index n) {
    if (n < 0 || n > vs.cells())
        throw std::out_of_range("index " + std::to_string(n) + " outside [0, M_N = " + std::to_string(vs.cells()) + "]");
}

void check_depth(const Structure& vs, int n) {
    if (n < 0 || n > vs.resolution())
        throw ResolutionError("level " + std::to_string(n) + " exceeds resolution " + std::to_string(vs.resolution()));
}

// position[n] = cell id holding coefficient n after the per-coordinate DFTs.
std::vector<Index> digit_reversal(const Structure& vs) {
    const int N = vs.resolution();
    std::vector<Index> position(static_cast<std::size_t>(vs.cells()));
    std::vector<int> digits(static_cast<std::size_t>(N), 0);
    Index pos = 0;
    for (Index n = 0; n < vs.cells(); ++n) {
        position[static_cast<std::size_t>(n)] = pos;
        for (int k = 0; k < N; ++k) {
            auto& d = digits[static_cast<std::size_t>(k)];
            if (++d < vs.radix(k)) {
                pos += vs.stride(k);
                break;
            }
            pos -= static_cast<Index>(d - 1) * vs.stride(k);
            d = 0;
        }
    }
    return position;
}

// In place, over cell order: along coordinate k replace each fibre a[x_k] by
// sum_x a[x] root^{sign * x * l}.
void digit_stages(Eigen::VectorXcd& a, const Structure& vs, int sign) {
    std::vector<Complex> in, out;
    for (int k = 0; k < vs.resolution(); ++k) {
        const int m = vs.radix(k);
        const Index stride = vs.stride(k);
        const Index span = stride * m;
        const auto roots = vs.roots(k);
        if (m == 2) {
            for (Index base = 0; base < a.size(); base += span)
                for (Index off = 0; off < stride; ++off) {
                    const Complex u = a[base + off];
                    const Complex v = a[base + off + stride];
                    a[base + off] = u + v;
                    a[base + off + stride] = u - v;
                }
            continue;
        }
        in.resize(static_cast<std::size_t>(m));
        out.resize(static_cast<std::size_t>(m));
        for (Index base = 0; base < a.size(); base += span)
            for (Index off = 0; off < stride; ++off) {
                for (int j = 0; j < m; ++j) in[static_cast<std::size_t>(j)] = a[base + off + j * stride];
                for (int l = 0; l < m; ++l) {
                    Complex acc = in[0];
                    for (int j = 1; j < m; ++j) {
                        const int e = ((sign * j * l) % m + m) % m;
                        acc += in[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(e)];
                    }
                    out[static_cast<std::size_t>(l)] = acc;
                }
                for (int l = 0; l < m; ++l) a[base + off + l * stride] = out[static_cast<std::size_t>(l)];
            }
    }
}

}  // namespace

StepFunction::StepFunction(Structure vs) : vs_(std::move(vs)), values_(Eigen::VectorXcd::Zero(vs_.cells())) {}

StepFunction::StepFunction(Structure vs, Eigen::VectorXcd values) : vs_(std::move(vs)), values_(std::move(values)) {
    check_length(vs_, values_.size(), "step function");
}

StepFunction& StepFunction::operator+=(const StepFunction& rhs) {
    require_same(vs_, rhs.vs_);
    values_ += rhs.values_;
    return *this;
}

StepFunction& StepFunction::operator-=(const StepFunction& rhs) {
    require_same(vs_, rhs.vs_);
    values_ -= rhs.values_;
    return *this;
}

StepFunction operator+(StepFunction lhs, const StepFunction& rhs) { return lhs += rhs; }
StepFunction operator-(StepFunction lhs, const StepFunction& rhs) { return lhs -= rhs; }
StepFunction operator*(Complex c, StepFunction f) { return f *= c; }

Spectrum::Spectrum(Structure vs) : vs_(std::move(vs)), coeffs_(Eigen::VectorXcd::Zero(vs_.cells())) {}

Spectrum::Spectrum(Structure vs, Eigen::VectorXcd coeffs) : vs_(std::move(vs)), coeffs_(std::move(coeffs)) {
    check_length(vs_, coeffs_.size(), "spectrum");
}

Spectrum& Spectrum::operator+=(const Spectrum& rhs) {
    require_same(vs_, rhs.vs_);
    coeffs_ += rhs.coeffs_;
    return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& rhs) {
    require_same(vs_, rhs.vs_);
    coeffs_ -= rhs.coeffs_;
    return *this;
}

Spectrum operator+(Spectrum lhs, const Spectrum& rhs) { return lhs += rhs; }
Spectrum operator-(Spectrum lhs, const Spectrum& rhs) { return lhs -= rhs; }
Spectrum operator*(Complex c, Spectrum s) { return s *= c; }

Spectrum analyze(const StepFunction& f) {
    const Structure& vs = f.structure();
    Eigen::VectorXcd work = f.values();
    digit_stages(work, vs, -1);
    const auto position = digit_reversal(vs);
    Eigen::VectorXcd coeffs(vs.cells());
    const double scale = vs.cell_measure();
    for (Index n = 0; n < vs.cells(); ++n) coeffs[n] = work[position[static_cast<std::size_t>(n)]] * scale;
    return Spectrum(vs, std::move(coeffs));
}

StepFunction synthesize(const Spectrum& s) {
    const Structure& vs = s.structure();
    const auto position = digit_reversal(vs);
    Eigen::VectorXcd work(vs.cells());
    for (Index n = 0; n < vs.cells(); ++n) work[position[static_cast<std::size_t>(n)]] = s[n];
    digit_stages(work, vs, +1);
    return StepFunction(vs, std::move(work));
}

Spectrum truncate_below(const Spectrum& s, Index n) {
    check_index(s.structure(), n);
    Spectrum out = s;
    out.coeffs().tail(s.size() - n).setZero();
    return out;
}

Spectrum tail_from(const Spectrum& s, Index n) {
    check_index(s.structure(), n);
    Spectrum out = s;
    out.coeffs().head(n).setZero();
    return out;
}

StepFunction partial_sum(const Spectrum& s, Index n) { return synthesize(truncate_below(s, n)); }

StepFunction partial_sum_total(const Spectrum& s, Index first, Index last) {
    check_index(s.structure(), last);
    if (first < 0 || first > last) throw std::out_of_range("partial_sum_total needs 0 <= first <= last");
    Spectrum w = truncate_below(s, last);
    for (Index t = 0; t < last; ++t) w[t] *= static_cast<double>(last - std::max(first, t));
    return synthesize(w);
}

Spectrum fejer_spectrum(const Spectrum& s, Index n) {
    if (n < 1) throw std::domain_error("Fejer mean sigma_n needs n >= 1");
    check_index(s.structure(), n);
    Spectrum out = truncate_below(s, n);
    const double inv = 1.0 / static_cast<double>(n);
    for (Index j = 1; j < n; ++j) out[j] *= 1.0 - static_cast<double>(j) * inv;
    return out;
}

StepFunction fejer_mean(const Spectrum& s, Index n) { return synthesize(fejer_spectrum(s, n)); }

StepFunction convolve(const StepFunction& f, const StepFunction& g) {
    require_same(f.structure(), g.structure());
    Spectrum sf = analyze(f);
    const Spectrum sg = analyze(g);
    sf.coeffs().array() *= sg.coeffs().array();
    return synthesize(sf);
}

StepFunction condexp(const Spectrum& s, int n) {
    check_depth(s.structure(), n);
    return partial_sum(s, s.structure().block(n));
}

StepFunction block_average(const StepFunction& f, int n) {
    const Structure& vs = f.structure();
    check_depth(vs, n);
    const Index width = vs.cells() / vs.block(n);
    StepFunction out(vs);
    for (Index base = 0; base < vs.cells(); base += width)
        out.values().segment(base, width).setConstant(f.values().segment(base, width).mean());
    return out;
}

StepFunction maximal_function(const Spectrum& s) {
    const Structure& vs = s.structure();
    const StepFunction f = synthesize(s);
    // level holds one value per depth-n cylinder; refining from n+1 to n
    // averages m_n consecutive entries.
    Eigen::VectorXcd level = f.values();
    Eigen::VectorXd best = level.cwiseAbs();
    for (int n = vs.resolution() - 1; n >= 0; --n) {
        const int m = vs.radix(n);
        Eigen::VectorXcd coarse(vs.block(n));
        for (Index c = 0; c < coarse.size(); ++c) coarse[c] = level.segment(c * m, m).mean();
        level = std::move(coarse);
        const Index width = vs.cells() / vs.block(n);
        for (Index c = 0; c < level.size(); ++c) {
            const double a = std::abs(level[c]);
            auto seg = best.segment(c * width, width);
            seg = seg.cwiseMax(a);
        }
    }
    return StepFunction(vs, best.cast<Complex>());
}

MaximalWeight::MaximalWeight(double p_) : p(p_) {
    if (!(p > 0.0 && p <= 0.5)) throw ValidationError("weighted Fejer maximal operator needs 0 < p <= 1/2");
    exponent = 1.0 / p - 2.0;
    log_power = 2 * static_cast<int>(std::floor(0.5 + p));
}

double MaximalWeight::operator()(Index n) const {
    const double arg = static_cast<double>(n) + 1.0;
    return std::pow(arg, exponent) * std::pow(std::log(arg), log_power);
}

void for_each_fejer_mean(const Spectrum& s, Index n_max,
                         const std::function<void(Index, const Eigen::VectorXcd&)>& visit) {
    const Structure& vs = s.structure();
    if (n_max < 1) return;
    check_index(vs, n_max);
    Eigen::VectorXcd partial = Eigen::VectorXcd::Zero(vs.cells());
    Eigen::VectorXcd running = Eigen::VectorXcd::Zero(vs.cells());
    Eigen::VectorXcd sigma(vs.cells());
    for (Index n = 1; n <= n_max; ++n) {
        const Complex c = s[n - 1];
        if (c != Complex{}) partial += c * character_values(n - 1, vs);
        running += partial;
        sigma = running / static_cast<double>(n);
        visit(n, sigma);
    }
}

StepFunction weighted_maximal_fejer(const Spectrum& s, double p, Index n_max) {
    const MaximalWeight weight(p);
    Eigen::VectorXd best = Eigen::VectorXd::Zero(s.size());
    for_each_fejer_mean(s, n_max, [&](Index n, const Eigen::VectorXcd& sigma) {
        best = best.cwiseMax(sigma.cwiseAbs() / weight(n));
    });
    return StepFunction(s.structure(), best.cast<Complex>());
}

}  // namespace vilenkin
