#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/random.hpp"

using namespace vilenkin;

namespace {

double max_abs(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("rademacher") {
    const Structure vs({2, 3}, 2);
    CHECK(rademacher(0, GroupPoint{{1, 0}}, vs) == Complex(-1, 0));
    CHECK(rademacher(1, GroupPoint{{1, 0}}, vs) == Complex(1, 0));
    CHECK(rademacher(0, GroupPoint{{0, 2}}, vs) == Complex(1, 0));
    CHECK(std::abs(rademacher(1, GroupPoint{{0, 1}}, vs) - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-15);
    CHECK_THROWS_AS(rademacher(2, GroupPoint{{0, 1}}, vs), ResolutionError);
}

TEST_CASE("characters") {
    const Structure walsh = Structure::dyadic(4);
    for (Index cell = 0; cell < walsh.cells(); ++cell) CHECK(character(0, cell_to_point(cell, walsh), walsh) == Complex(1, 0));
    CHECK(character(1, GroupPoint{{1, 0, 0, 0}}, walsh) == Complex(-1, 0));

    const Structure vs({2, 3, 2, 3}, 4);
    for (int k = 0; k < 4; ++k)
        for (Index cell = 0; cell < vs.cells(); ++cell) {
            const GroupPoint x = cell_to_point(cell, vs);
            CHECK(character(vs.block(k), x, vs) == rademacher(k, x, vs));
        }
}

TEST_CASE("character tables agree with the polar-form oracle") {
    for (const Structure& vs : {Structure({2, 3, 2, 3}, 4), Structure({5, 2, 4}, 3), Structure::dyadic(6)}) {
        for (Index n = 0; n < vs.cells(); ++n) {
            const Eigen::VectorXcd lib = character_values(n, vs);
            CHECK(max_abs(lib - oracle::character_column(n, vs)) < 1e-13);
            for (Index cell = 0; cell < vs.cells(); cell += 7)
                CHECK(std::abs(character(n, cell_to_point(cell, vs), vs) - lib[cell]) < 1e-15);
        }
    }
}

TEST_CASE("characters are homomorphisms and multiply digitwise") {
    const Structure vs({3, 2, 4, 3}, 4);
    XorShift64Star rng(12);
    for (int t = 0; t < 100; ++t) {
        const Index a = static_cast<Index>(rng.below(vs.cells())), b = static_cast<Index>(rng.below(vs.cells()));
        const GroupPoint x = cell_to_point(static_cast<Index>(rng.below(vs.cells())), vs);
        const GroupPoint y = cell_to_point(static_cast<Index>(rng.below(vs.cells())), vs);
        CHECK(std::abs(character(a, add_points(x, y, vs), vs) - character(a, x, vs) * character(a, y, vs)) < 1e-13);

        auto da = index_to_digits(a, vs);
        const auto db = index_to_digits(b, vs);
        for (int k = 0; k < 4; ++k)
            da[static_cast<std::size_t>(k)] = (da[static_cast<std::size_t>(k)] + db[static_cast<std::size_t>(k)]) % vs.radix(k);
        const Index sum = digits_to_index(da, vs);
        CHECK(std::abs(character(sum, x, vs) - character(a, x, vs) * character(b, x, vs)) < 1e-13);
    }
}

TEST_CASE("dirichlet kernels") {
    const Structure walsh = Structure::dyadic(4);
    CHECK(max_abs(dirichlet_kernel(1, walsh).values() - Eigen::VectorXcd::Ones(16)) == 0.0);
    CHECK(max_abs(dirichlet_kernel(3, walsh).values() - oracle::dirichlet(3, walsh)) < 1e-14);

    const Structure vs({2, 3, 2, 3}, 4);
    const StepFunction d6 = dirichlet_kernel(6, vs);
    const CellRange i2 = cylinder_cells(zero_point(vs), 2, vs);
    for (Index cell = 0; cell < vs.cells(); ++cell)
        CHECK(std::abs(d6[cell] - (i2.contains(cell) ? 6.0 : 0.0)) < 1e-14);

    for (Index n = 1; n <= vs.cells(); ++n)
        CHECK(max_abs(dirichlet_kernel(n, vs).values() - oracle::dirichlet(n, vs)) < 1e-12);
    CHECK_THROWS_AS(dirichlet_kernel(0, vs), std::domain_error);
    CHECK_THROWS_AS(dirichlet_kernel(37, vs), ResolutionError);
}

TEST_CASE("fejer kernels") {
    const Structure walsh = Structure::dyadic(4);
    CHECK(max_abs(fejer_kernel(1, walsh).values() - Eigen::VectorXcd::Ones(16)) == 0.0);
    CHECK(std::abs(fejer_kernel(2, walsh)[0] - 1.5) < 1e-15);

    Eigen::VectorXcd average = Eigen::VectorXcd::Zero(16);
    for (Index k = 1; k <= 5; ++k) average += oracle::dirichlet(k, walsh);
    CHECK(max_abs(fejer_kernel(5, walsh).values() - average / 5.0) < 1e-14);

    const Structure vs({3, 2, 3}, 3);
    for (Index n = 1; n <= vs.cells(); ++n) {
        const StepFunction K = fejer_kernel(n, vs);
        CHECK(max_abs(K.values() - oracle::fejer(n, vs)) < 1e-12);
        CHECK(std::abs(K.integral() - 1.0) < 1e-13);
    }
}

TEST_CASE("q_index") {
    CHECK(q_index(3, Structure::dyadic(6)) == 85);
    CHECK(q_index(0, Structure::dyadic(0)) == 1);
    CHECK(q_index(2, Structure({2, 3, 2, 3}, 4)) == 43);
    CHECK_THROWS_AS(q_index(4, Structure::dyadic(7)), ResolutionError);
}

TEST_CASE("lower-bound catalogue") {
    const Structure vs = Structure::dyadic(5);
    const auto a3 = bound_cells_3a(3, vs);
    REQUIRE(a3.size() == 1);
    CHECK(a3[0].k == 0);
    CHECK(a3[0].s == 2);
    CHECK(a3[0].bound == 4.0);
    const GroupPoint base = add_points(basis_point(0, 1, vs), basis_point(4, 1, vs), vs);
    CHECK(a3[0].cells == cylinder_cells(base, 5, vs));

    CHECK(bound_cells_3a(2, vs).empty());

    const auto a4 = bound_cells_3a(4, Structure::dyadic(7));
    REQUIRE(a4.size() == 3);
    CHECK((a4[0].k == 0 && a4[0].s == 2 && a4[0].bound == 4.0));
    CHECK((a4[1].k == 0 && a4[1].s == 3 && a4[1].bound == 16.0));
    CHECK((a4[2].k == 1 && a4[2].s == 3 && a4[2].bound == 64.0));  // M_2 M_6 / 4
    CHECK_THROWS_AS(bound_cells_3a(4, vs), ResolutionError);
}

TEST_CASE("kernel lower bound holds for A = 3 and mixed radices") {
    const KernelBoundReport r = check_kernel_bound(3, Structure::dyadic(5));
    CHECK(r.entries == 1);
    CHECK(r.kernel_index == 21);
    CHECK(r.cells_checked == 1);
    CHECK(r.violations == 0);

    // Catalogue digits run over 1..m-1, so m = 3 exercises several tuples.
    const Structure mixed = Structure::repeating({3, 2}, 7);
    const KernelBoundReport m = check_kernel_bound(4, mixed);
    CHECK(m.entries == bound_cells_3a(4, mixed).size());
    CHECK(m.violations == 0);
}

TEST_CASE("a wrong catalogue is caught") {
    const Structure vs = Structure::dyadic(5);
    auto catalogue = bound_cells_3a(3, vs);
    catalogue[0].bound *= 100.0;
    CHECK(check_kernel_bound(3, vs, catalogue).violations == 1);
}
