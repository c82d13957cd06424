#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/random.hpp"

using namespace vilenkin;

TEST_CASE("structure bookkeeping") {
    const Structure vs({2, 3, 2, 3}, 4);
    CHECK(vs.cells() == 36);
    CHECK(vs.block(0) == 1);
    CHECK(vs.block(2) == 6);
    CHECK(vs.bound() == 3);
    CHECK(vs.stride(0) == 18);
    CHECK(vs.stride(3) == 1);
    CHECK(Structure::repeating({2, 3}, 5).radices() == std::vector<int>{2, 3, 2, 3, 2});
    CHECK_THROWS_AS(Structure({2, 1}, 2), ValidationError);
    CHECK_THROWS_AS(Structure({2, 2}, 3), ValidationError);
    CHECK_THROWS_AS(Structure::dyadic(70), CapacityError);
}

TEST_CASE("roots of unity are exact at quarter turns") {
    const Structure vs({2, 4, 3}, 3);
    CHECK(vs.roots(0)[1] == Complex(-1, 0));
    CHECK(vs.roots(1)[1] == Complex(0, 1));
    CHECK(vs.roots(1)[3] == Complex(0, -1));
    CHECK(std::abs(vs.roots(2)[1] - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-15);
}

TEST_CASE("index_to_digits") {
    CHECK(index_to_digits(7, Structure({2, 3, 2}, 3)) == std::vector<int>{1, 0, 1});
    CHECK(index_to_digits(0, Structure({3, 2, 5}, 3)) == std::vector<int>{0, 0, 0});
    CHECK(index_to_digits(13, Structure::dyadic(4)) == std::vector<int>{1, 0, 1, 1});
    CHECK(index_to_digits(5, Structure::dyadic(4), 3) == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(index_to_digits(16, Structure::dyadic(4)), std::out_of_range);
    CHECK_THROWS_AS(index_to_digits(1, Structure::dyadic(4), 5), ResolutionError);
}

TEST_CASE("digits_to_index") {
    const std::vector<int> a{1, 0, 1}, zero{0, 0, 0}, ones{1, 1, 1};
    CHECK(digits_to_index(a, Structure({2, 3, 2}, 3)) == 7);
    CHECK(digits_to_index(zero, Structure({2, 3, 2}, 3)) == 0);
    CHECK(digits_to_index(ones, Structure::dyadic(3)) == 7);
    const std::vector<int> bad{2, 0, 0};
    CHECK_THROWS_AS(digits_to_index(bad, Structure::dyadic(3)), ValidationError);
}

TEST_CASE("digit round trip on mixed radices") {
    const Structure vs({2, 3, 5, 2, 4}, 5);
    for (Index n = 0; n < vs.cells(); ++n) {
        const auto d = index_to_digits(n, vs);
        CHECK(digits_to_index(d, vs) == n);
        CHECK(d == oracle::digits_of_index(n, vs));
    }
}

TEST_CASE("leading_position") {
    CHECK(leading_position(5, Structure::dyadic(4)) == 2);
    CHECK(leading_position(1, Structure({3, 2, 5}, 3)) == 0);
    CHECK(leading_position(7, Structure({2, 3, 2}, 3)) == 2);
    CHECK_THROWS_AS(leading_position(0, Structure::dyadic(3)), std::domain_error);
    const Structure vs({2, 3, 2, 3}, 4);
    for (Index n = 1; n < vs.cells(); ++n) {
        const int j = leading_position(n, vs);
        CHECK(vs.block(j) <= n);
        CHECK(n < vs.block(j + 1));
    }
}

TEST_CASE("group addition") {
    const Structure vs({2, 3}, 2);
    const GroupPoint x{{1, 2}};
    CHECK(add_points(x, x, vs) == GroupPoint{{0, 1}});
    CHECK(add_points(x, zero_point(vs), vs) == x);
    CHECK(sub_points(x, x, vs) == zero_point(vs));
    CHECK_THROWS_AS(add_points(GroupPoint{{2, 0}}, x, vs), ValidationError);
}

TEST_CASE("group axioms on random points") {
    const Structure vs({2, 3, 4, 5, 2}, 5);
    XorShift64Star rng(3);
    auto random_point = [&] { return cell_to_point(static_cast<Index>(rng.below(vs.cells())), vs); };
    for (int t = 0; t < 200; ++t) {
        const GroupPoint x = random_point(), y = random_point(), z = random_point();
        CHECK(add_points(add_points(x, y, vs), z, vs) == add_points(x, add_points(y, z, vs), vs));
        CHECK(add_points(x, y, vs) == add_points(y, x, vs));
        CHECK(add_points(sub_points(x, y, vs), y, vs) == x);
        CHECK(sub_cells(point_to_cell(x, vs), point_to_cell(y, vs), vs) == point_to_cell(sub_points(x, y, vs), vs));
    }
}

TEST_CASE("cell ids put x_0 first") {
    const Structure vs({2, 3, 2, 3}, 4);
    for (Index cell = 0; cell < vs.cells(); ++cell) {
        const GroupPoint x = cell_to_point(cell, vs);
        CHECK(point_to_cell(x, vs) == cell);
        for (int k = 0; k < 4; ++k) CHECK(x.digits[static_cast<std::size_t>(k)] == oracle::digit_of_cell(cell, k, vs));
    }
    CHECK(cell_to_point(18, vs) == GroupPoint{{1, 0, 0, 0}});
    CHECK(cell_to_point(1, vs) == GroupPoint{{0, 0, 0, 1}});
}

TEST_CASE("basis points") {
    CHECK(basis_point(2, 1, Structure::dyadic(5)).digits == std::vector<int>{0, 0, 1, 0, 0});
    CHECK(basis_point(1, 2, Structure({2, 3}, 2)).digits == std::vector<int>{0, 2});
    CHECK_THROWS_AS(basis_point(1, 0, Structure({2, 3}, 2)), ValidationError);
    CHECK_THROWS_AS(basis_point(2, 1, Structure({2, 3}, 2)), ResolutionError);
}

TEST_CASE("cylinders") {
    const Structure vs = Structure::dyadic(3);
    const CellRange all = cylinder_cells(zero_point(vs), 0, vs);
    CHECK(all.first == 0);
    CHECK(all.count == 8);
    const GroupPoint x{{1, 0, 1}};
    const CellRange single = cylinder_cells(x, 3, vs);
    CHECK(single.count == 1);
    CHECK(single.first == point_to_cell(x, vs));
    const CellRange half = cylinder_cells(zero_point(vs), 1, vs);
    CHECK(half == CellRange{0, 4});
    CHECK(half.measure(vs) == 0.5);
    CHECK_THROWS_AS(cylinder_cells(x, 4, vs), ResolutionError);
}

TEST_CASE("cylinder membership matches the digit definition") {
    const Structure vs({3, 2, 4, 2}, 4);
    XorShift64Star rng(8);
    for (int t = 0; t < 40; ++t) {
        const GroupPoint x = cell_to_point(static_cast<Index>(rng.below(vs.cells())), vs);
        const int n = static_cast<int>(rng.below(5));
        const CellRange I = cylinder_cells(x, n, vs);
        CHECK(I.measure(vs) == doctest::Approx(1.0 / static_cast<double>(vs.block(n))));
        for (Index cell = 0; cell < vs.cells(); ++cell) {
            bool member = true;
            for (int k = 0; k < n; ++k)
                member = member && oracle::digit_of_cell(cell, k, vs) == x.digits[static_cast<std::size_t>(k)];
            CHECK(I.contains(cell) == member);
        }
    }
}
