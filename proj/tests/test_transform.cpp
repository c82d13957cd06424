#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

double max_abs(const Eigen::VectorXcd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Eigen::VectorXcd random_vector(Index size, XorShift64Star& rng) {
    Eigen::VectorXcd v(size);
    for (Index i = 0; i < size; ++i) v[i] = rng.unit_box();
    return v;
}

StepFunction random_function(const Structure& vs, XorShift64Star& rng) { return {vs, random_vector(vs.cells(), rng)}; }
Spectrum random_spectrum(const Structure& vs, XorShift64Star& rng) { return {vs, random_vector(vs.cells(), rng)}; }

// (1/M) sum_t f(t) g(x - t), straight from the definition.
Eigen::VectorXcd direct_convolution(const StepFunction& f, const StepFunction& g) {
    const Structure& vs = f.structure();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(vs.cells());
    for (Index x = 0; x < vs.cells(); ++x) {
        const GroupPoint px = cell_to_point(x, vs);
        for (Index t = 0; t < vs.cells(); ++t)
            out[x] += f[t] * g[point_to_cell(sub_points(px, cell_to_point(t, vs), vs), vs)];
    }
    return out / static_cast<double>(vs.cells());
}

const Structure kStructures[] = {Structure({2, 3, 2, 3}, 4), Structure::dyadic(8), Structure({4, 3, 5}, 3),
                                 Structure({3}, 1)};

}  // namespace

TEST_CASE("analyze examples") {
    const Structure vs = Structure::dyadic(3);
    const Spectrum c = analyze(StepFunction(vs, Eigen::VectorXcd::Constant(8, Complex(2.5, -1))));
    CHECK(c[0] == Complex(2.5, -1));
    CHECK(max_abs(c.coeffs().tail(7)) == 0.0);

    StepFunction ind(vs);
    ind.values().head(4).setOnes();  // I_1(0)
    const Spectrum s = analyze(ind);
    CHECK(s[0] == Complex(0.5));
    CHECK(s[1] == Complex(0.5));
    CHECK(max_abs(s.coeffs().tail(6)) == 0.0);
}

TEST_CASE("fast analysis matches the naive transform") {
    XorShift64Star rng(1);
    for (const auto& vs : kStructures) {
        const StepFunction f = random_function(vs, rng);
        const Eigen::VectorXcd naive = oracle::analyze(f.values(), vs);
        CHECK(max_abs(analyze(f).coeffs() - naive) <= 1e-10 * max_abs(naive));
    }
}

TEST_CASE("synthesis") {
    const Structure vs({2, 3, 2, 3}, 4);
    for (Index n : {Index{0}, Index{1}, Index{7}, Index{35}}) {
        Spectrum delta(vs);
        delta[n] = 1.0;
        CHECK(max_abs(synthesize(delta).values() - character_values(n, vs)) < 1e-14);
    }
    CHECK(max_abs(synthesize(Spectrum(vs)).values()) == 0.0);

    XorShift64Star rng(2);
    for (const auto& s : kStructures) {
        const Spectrum c = random_spectrum(s, rng);
        CHECK(max_abs(synthesize(c).values() - oracle::synthesize(c.coeffs(), s)) < 1e-12);
        CHECK(max_abs(analyze(synthesize(c)).coeffs() - c.coeffs()) < 1e-13);
    }
}

TEST_CASE("structures must match") {
    StepFunction a(Structure::dyadic(3));
    const StepFunction b(Structure({2, 4}, 2));
    CHECK_THROWS_AS(a += b, ValidationError);
    CHECK_THROWS_AS(convolve(a, b), ValidationError);
}

TEST_CASE("partial sums") {
    XorShift64Star rng(3);
    const Structure vs({2, 3, 2, 3}, 4);
    const Spectrum s = random_spectrum(vs, rng);
    const StepFunction f = synthesize(s);
    CHECK(max_abs(partial_sum(s, vs.cells()).values() - f.values()) < 1e-13);
    CHECK(max_abs(partial_sum(s, 0).values()) == 0.0);
    CHECK(max_abs(partial_sum(s, 1).values() - Eigen::VectorXcd::Constant(36, s[0])) < 1e-15);
    for (int j = 0; j <= 4; ++j)
        CHECK(max_abs(partial_sum(s, vs.block(j)).values() - oracle::conditional_expectation(f.values(), j, vs)) < 1e-13);
    for (Index n = 0; n <= vs.cells(); n += 5)
        CHECK(max_abs(truncate_below(s, n).coeffs() + tail_from(s, n).coeffs() - s.coeffs()) == 0.0);
}

TEST_CASE("partial_sum_total counts each S_j") {
    XorShift64Star rng(4);
    const Structure vs({3, 2, 3}, 3);
    const Spectrum s = random_spectrum(vs, rng);
    for (auto [first, last] : {std::pair<Index, Index>{0, 18}, {4, 11}, {7, 7}, {2, 3}}) {
        Eigen::VectorXcd want = Eigen::VectorXcd::Zero(vs.cells());
        for (Index j = first + 1; j <= last; ++j) want += partial_sum(s, j).values();
        CHECK(max_abs(partial_sum_total(s, first, last).values() - want) < 1e-12);
    }
}

TEST_CASE("fejer means") {
    const Structure vs = Structure::dyadic(4);
    XorShift64Star rng(5);
    const Spectrum s = random_spectrum(vs, rng);
    CHECK(max_abs(fejer_mean(s, 1).values() - Eigen::VectorXcd::Constant(16, s[0])) < 1e-15);

    Spectrum two(vs);
    two[0] = 1.0;
    two[1] = 1.0;
    const Spectrum f2 = fejer_spectrum(two, 2);
    CHECK(f2[0] == Complex(1.0));
    CHECK(f2[1] == Complex(0.5));
    CHECK(max_abs(f2.coeffs().tail(14)) == 0.0);

    const StepFunction f = synthesize(s);
    for (Index n : {Index{1}, Index{3}, Index{8}, Index{11}, Index{16}}) {
        const Eigen::VectorXcd direct = oracle::fejer_mean(s.coeffs(), n, vs);
        CHECK(max_abs(fejer_mean(s, n).values() - direct) < 1e-12);
        CHECK(max_abs(convolve(f, fejer_kernel(n, vs)).values() - direct) < 1e-12);
    }
}

TEST_CASE("fejer recursion visits every n") {
    XorShift64Star rng(6);
    const Structure vs({2, 3, 2}, 3);
    const Spectrum s = random_spectrum(vs, rng);
    Index expected = 1;
    for_each_fejer_mean(s, vs.cells(), [&](Index n, const Eigen::VectorXcd& sigma) {
        CHECK(n == expected++);
        CHECK(max_abs(sigma - fejer_mean(s, n).values()) < 1e-12);
    });
    CHECK(expected == vs.cells() + 1);
}

TEST_CASE("convolution") {
    XorShift64Star rng(7);
    const Structure vs({2, 3, 2}, 3);
    const StepFunction f = random_function(vs, rng), g = random_function(vs, rng);
    CHECK(max_abs(convolve(f, g).values() - direct_convolution(f, g)) < 1e-13);
    CHECK(max_abs(convolve(f, dirichlet_kernel(vs.cells(), vs)).values() - f.values()) < 1e-12);
    const StepFunction one(vs, Eigen::VectorXcd::Ones(vs.cells()));
    CHECK(max_abs(convolve(f, one).values() - Eigen::VectorXcd::Constant(vs.cells(), f.integral())) < 1e-14);
    const Eigen::VectorXcd product = analyze(f).coeffs().cwiseProduct(analyze(g).coeffs());
    CHECK(max_abs(analyze(convolve(f, g)).coeffs() - product) < 1e-14);
}

TEST_CASE("conditional expectations") {
    XorShift64Star rng(8);
    for (const auto& vs : kStructures) {
        const Spectrum s = random_spectrum(vs, rng);
        const StepFunction f = synthesize(s);
        CHECK(max_abs(condexp(s, 0).values() - Eigen::VectorXcd::Constant(vs.cells(), f.integral())) < 1e-13);
        CHECK(max_abs(condexp(s, vs.resolution()).values() - f.values()) < 1e-13);
        for (int n = 0; n <= vs.resolution(); ++n) {
            CHECK(max_abs(condexp(s, n).values() - block_average(f, n).values()) < 1e-13);
            CHECK(max_abs(block_average(f, n).values() - oracle::conditional_expectation(f.values(), n, vs)) < 1e-13);
        }
    }
}

TEST_CASE("maximal function") {
    const Structure vs = Structure::dyadic(4);
    Spectrum c(vs);
    c[0] = Complex(-3, 4);
    CHECK(max_abs(maximal_function(c).values() - Eigen::VectorXcd::Constant(16, 5.0)) < 1e-14);

    Spectrum psi1(vs);
    psi1[1] = 1.0;
    CHECK(max_abs(maximal_function(psi1).values() - Eigen::VectorXcd::Ones(16)) < 1e-14);

    XorShift64Star rng(9);
    for (const auto& s : kStructures) {
        const Spectrum r = random_spectrum(s, rng);
        const Eigen::VectorXcd star = maximal_function(r).values();
        CHECK(star.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK((star.real().array() >= synthesize(r).values().cwiseAbs().array() - 1e-13).all());
        CHECK((star.real() - oracle::maximal(synthesize(r).values(), s)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("maximal weights") {
    const MaximalWeight quarter(0.25);
    CHECK(quarter.exponent == 2.0);
    CHECK(quarter.log_power == 0);
    CHECK(quarter(3) == doctest::Approx(16.0));
    const MaximalWeight half(0.5);
    CHECK(half.exponent == 0.0);
    CHECK(half.log_power == 2);
    CHECK(half(6) == doctest::Approx(std::log(7.0) * std::log(7.0)));
    CHECK_THROWS_AS(MaximalWeight(0.75), ValidationError);

    const Structure vs = Structure::dyadic(3);
    CHECK(max_abs(weighted_maximal_fejer(Spectrum(vs), 0.5, 8).values()) == 0.0);
    Spectrum s(vs);
    s[0] = 1.0;
    const StepFunction w = weighted_maximal_fejer(s, 0.5, 8);
    CHECK(w[0].real() == doctest::Approx(1.0 / half(1)));
}
