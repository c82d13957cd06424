#include <doctest.h>

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/counterexamples.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/kernels.hpp"

using namespace vilenkin;

namespace {

double max_abs(const Eigen::VectorXcd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("2a atoms") {
    const Structure vs = Structure::dyadic(5);
    const StepFunction a1 = atom_2a(1, 0.25, vs);
    const CellRange i1 = cylinder_cells(zero_point(vs), 1, vs), i2 = cylinder_cells(zero_point(vs), 2, vs);
    for (Index x = 0; x < vs.cells(); ++x) {
        const double want = i2.contains(x) ? 8.0 : i1.contains(x) ? -8.0 : 0.0;
        CHECK(std::abs(a1[x] - want) < 1e-13);
    }
    for (double p : {0.25, 0.4})
        for (int k = 0; k + 1 <= vs.resolution(); ++k) {
            const StepFunction a = atom_2a(k, p, vs);
            CHECK(std::abs(a.integral()) < 1e-12);
            CHECK(validate_atom(a, p, atom_2a_interval(k, vs)).valid());
            const double height = std::pow(static_cast<double>(vs.block(k)), 1.0 / p - 1.0) / vs.bound();
            const Eigen::VectorXcd c = oracle::analyze(a.values(), vs);
            for (Index j = 0; j < vs.cells(); ++j) {
                const double want = j >= vs.block(k) && j < vs.block(k + 1) ? height : 0.0;
                CHECK(std::abs(c[j] - want) < 1e-12 * std::max(1.0, height));
            }
        }
    CHECK_THROWS_AS(atom_2a(5, 0.25, vs), ResolutionError);
}

TEST_CASE("2a coefficient law") {
    for (const Structure& vs : {Structure::dyadic(6), Structure::repeating({3, 2}, 5)}) {
        const Construction2a c = build_2a(0.3, vs.resolution() - 1, vs);
        CHECK(std::abs(c.spectrum[0]) < 1e-12 * static_cast<double>(vs.cells()));
        for (Index j = 1; j < vs.cells(); ++j)
            CHECK(std::abs(c.spectrum[j] - static_cast<double>(vs.block(leading_position(j, vs)))) <
                  1e-12 * static_cast<double>(vs.cells()));
    }
    const Structure walsh = Structure::dyadic(4);
    CHECK(std::abs(build_2a(0.25, 3, walsh).spectrum[5] - 4.0) < 1e-13);

    const Construction2a zero = build_2a(0.25, 0, walsh);
    CHECK(std::abs(zero.spectrum[1] - 1.0) < 1e-14);
    CHECK(max_abs(zero.spectrum.coeffs().tail(14)) < 1e-14);
    CHECK(zero.spectrum[0] == Complex(0.0));

    CHECK_THROWS_AS(build_2a(0.5, 2, walsh), ValidationError);
    CHECK_THROWS_AS(build_2a(0.25, 4, walsh), CapacityError);
}

TEST_CASE("2a modulus of continuity") {
    const Structure vs = Structure::dyadic(11);
    const double p = 0.25;
    const Construction2a c = build_2a(p, 10, vs);
    const auto rows = modulus_report_2a(c, 0, 11);

    // The truncation keeps block A, so omega vanishes one level later.
    CHECK(rows[10].value("omega") == doctest::Approx(std::pow(2.0, -20.0)));
    CHECK(rows[10].value("ratio") == doctest::Approx(1.0));
    CHECK(rows[11].value("omega") == 0.0);

    // Bracket: the first tail block alone from below (|f^(n+1)| <= f*),
    // p-subadditivity of the atomic pieces from above.
    const Eigen::VectorXcd f = synthesize(c.spectrum).values();
    for (int n = 0; n <= 10; ++n) {
        const double omega = rows[static_cast<std::size_t>(n)].value("omega");
        double upper = 0.0;
        for (int i = n; i <= 10; ++i) upper += std::pow(c.decomposition.coefficients[static_cast<std::size_t>(i)], p);
        upper = std::pow(upper, 1.0 / p);
        const StepFunction first = c.decomposition.coefficients[static_cast<std::size_t>(n)] *
                                   c.decomposition.atoms[static_cast<std::size_t>(n)];
        CHECK(omega >= lp_quasinorm(first, p) * (1.0 - 1e-12));
        CHECK(omega <= upper * (1.0 + 1e-12));
        if (n <= 3) {
            const Eigen::VectorXcd tail = f - oracle::conditional_expectation(f, n, vs);
            CHECK(omega == doctest::Approx(oracle::lp(oracle::maximal(tail, vs), p)).epsilon(1e-12));
        }
    }
    for (int n = 1; n <= 8; ++n) MESSAGE("cond2 ratio n=" << n << ": " << rows[static_cast<std::size_t>(n)].value("ratio"));
}

TEST_CASE("2a divergence split") {
    const Structure vs = Structure::dyadic(9);
    const Construction2a c = build_2a(0.25, 8, vs);
    const StepFunction f = synthesize(c.spectrum);
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 8; ++k) {
        const Index Mk = vs.block(k);
        CHECK(max_abs((partial_sum(c.spectrum, Mk + 1) - partial_sum(c.spectrum, Mk)).values() -
                      static_cast<double>(Mk) * character_values(Mk, vs)) < 1e-10);

        const double a = static_cast<double>(Mk) / static_cast<double>(Mk + 1);
        const Eigen::VectorXcd split = a * (fejer_mean(c.spectrum, Mk) - f).values() +
                                       (1.0 / static_cast<double>(Mk + 1)) * (partial_sum(c.spectrum, Mk) - f).values() +
                                       a * character_values(Mk, vs);
        const Eigen::VectorXcd direct = (fejer_mean(c.spectrum, Mk + 1) - f).values();
        CHECK(max_abs(split - direct) < 1e-10);

        const Divergence2a d = divergence_2a(c, k);
        CHECK(d.powered == doctest::Approx(std::pow(d.value, 0.25)));
        CHECK(d.dominant == doctest::Approx(a));
        CHECK(d.value == doctest::Approx(std::pow(oracle::weak_powered(direct.cwiseAbs(), 0.25), 4.0)).epsilon(1e-12));
        CHECK(d.lp_fejer_dyadic < previous);
        previous = d.lp_fejer_dyadic;
    }
    CHECK_THROWS(divergence_2a(c, 8));
}

TEST_CASE("2b coefficient law and atoms") {
    const Structure vs = Structure::dyadic(9);
    const Construction2b c = build_2b(2, vs);
    for (Index j = 0; j < vs.cells(); ++j) {
        const double want = j >= 16 && j < 32 ? 4.0 : j >= 256 && j < 512 ? 16.0 : 0.0;
        CHECK(std::abs(c.spectrum[j] - want) < 1e-12);
    }
    for (int i = 1; i <= 2; ++i) {
        CHECK(atom_2b_interval(i, vs).depth == 2 * vs.block(i));
        CHECK(validate_atom(atom_2b(i, vs), 0.5, atom_2b_interval(i, vs)).valid());
    }
    CHECK(required_resolution_2b(3, vs) == 17);
    try {
        build_2b(3, vs);
        FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
        CHECK(e.required_resolution() == 17);
        CHECK(std::string(e.what()).find("17") != std::string::npos);
    }
}

TEST_CASE("2b modulus and divergence") {
    const Structure vs = Structure::dyadic(9);
    const Construction2b c = build_2b(2, vs);
    const auto rows = modulus_report_2b(c, 1, 9);
    for (const auto& row : rows) {
        const Index n = row.key("n");
        if (n > 8) CHECK(row.value("omega") == 0.0);
        else CHECK(row.value("omega") > 0.0);
        CHECK(row.value("ratio") == doctest::Approx(row.value("omega") * static_cast<double>(n * n)));
    }

    const StepFunction f = synthesize(c.spectrum);
    for (int k = 1; k <= 2; ++k) {
        const Divergence2b d = divergence_2b(c, k);
        CHECK(d.q == q_index(static_cast<int>(vs.block(k)), vs));
        const Eigen::VectorXcd direct = (fejer_mean(c.spectrum, d.q) - f).values();
        CHECK(d.value == doctest::Approx(lp_quasinorm(StepFunction(vs, direct), 0.5)));
        CHECK(std::sqrt(d.value) >= d.lower_bound() - 1e-12);

        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(vs.cells());
        for (const auto& part : fejer_split_2b(c, k)) sum += part.values();
        CHECK(max_abs(sum - direct) < 1e-9);

        // sigma_q f - f = (M/q)(sigma_M f - f) + (q'/q)(S_M f - f) + (M/(q M_k^2)) psi_M q' K_{q'}
        const Index M = vs.block(static_cast<int>(2 * vs.block(k)));
        const Index qp = q_index(static_cast<int>(vs.block(k)) - 1, vs);
        const double q = static_cast<double>(d.q), Mk = static_cast<double>(vs.block(k));
        const Eigen::VectorXcd rhs =
            (static_cast<double>(M) / q) * (fejer_mean(c.spectrum, M) - f).values() +
            (static_cast<double>(qp) / q) * (partial_sum(c.spectrum, M) - f).values() +
            (static_cast<double>(M) / (q * Mk * Mk)) * static_cast<double>(qp) *
                character_values(M, vs).cwiseProduct(fejer_kernel(qp, vs).values());
        CHECK(max_abs(rhs - direct) < 1e-9);
    }
}

TEST_CASE("kernel half-norm scan") {
    const Structure vs = Structure::dyadic(11);
    CHECK(kernel_halfnorm(1, vs) > 0.0);
    CHECK(std::isfinite(kernel_halfnorm(1, vs)));
    const auto rows = kernel_halfnorm_scan(1, 5, vs);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].value("ratio") >= 0.3);
        CHECK(rows[i].value("value") > rows[i - 1].value("value"));
    }
    const Index q = q_index(2, vs);
    const double direct = (static_cast<double>(q) * oracle::fejer(q, vs).cwiseAbs()).array().sqrt().mean();
    CHECK(rows[1].value("value") == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(kernel_halfnorm(6, vs), ResolutionError);
}
