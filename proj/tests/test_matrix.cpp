#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummercalc/matrix.hpp"
#include "test_helpers.hpp"

using namespace kummer;
using kummer::testing::make_rng;
using kummer::testing::rand_matrix;
using kummer::testing::snf_is_valid;

TEST_CASE("determinant: small cases") {
    CHECK(IntMatrix::identity(3).det() == 1);
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    CHECK(a.det() == -8);
    IntMatrix sing = IntMatrix::from_rows({{1, 2}, {2, 4}});
    CHECK(sing.det() == 0);
}

TEST_CASE("snf: identity stays diagonal") {
    IntMatrix a = IntMatrix::identity(3);
    auto s = smith_normal_form(a);
    CHECK(snf_is_valid(a, s));
    CHECK(s.D == IntMatrix::identity(3));
}

TEST_CASE("snf: diag(2,3) has invariant factors 1,6") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    auto s = smith_normal_form(a);
    CHECK(snf_is_valid(a, s));
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
}

TEST_CASE("snf: [[2,4],[6,8]]") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto s = smith_normal_form(a);
    CHECK(snf_is_valid(a, s));
    // d1 = gcd of entries, d1*d2 = |det|
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(0, 0) * s.D.at(1, 1) == int_abs(a.det()));
    CHECK(s.D.at(1, 1) == 4);
}

TEST_CASE("snf: random matrices satisfy all decomposition invariants") {
    auto rng = make_rng(101);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t r = 1 + (iter % 5), c = 1 + ((iter * 7) % 5);
        IntMatrix a = rand_matrix(rng, r, c, 10);
        auto s = smith_normal_form(a);
        CHECK(snf_is_valid(a, s));
    }
}

TEST_CASE("hnf: canonical basis of a row lattice") {
    IntMatrix a = IntMatrix::from_rows({{2}, {3}});
    IntMatrix h = hnf_rows(a);
    REQUIRE(h.rows() == 1);
    CHECK(h.at(0, 0) == 1);

    IntMatrix b = IntMatrix::from_rows({{1, 0}, {1, 2}});
    IntMatrix hb = hnf_rows(b);
    CHECK(hb == IntMatrix::from_rows({{1, 0}, {0, 2}}));
}

TEST_CASE("hnf: scrambled generators give the same canonical form") {
    auto rng = make_rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix a = rand_matrix(rng, 3, 3, 6);
        IntMatrix shuffled = a;
        shuffled.swap_rows(0, 2);
        shuffled.add_row_multiple(1, 0, Int(3));
        CHECK(hnf_rows(a) == hnf_rows(shuffled));
    }
}

TEST_CASE("hnf_solve: membership in the row lattice") {
    IntMatrix h = hnf_rows(IntMatrix::from_rows({{1, 0}, {0, 2}}));
    CHECK(hnf_solve(h, {3, 4}).has_value());
    CHECK(!hnf_solve(h, {0, 1}).has_value());
    auto coords = hnf_solve(h, {5, 6});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 5);
    CHECK((*coords)[1] == 3);
}

TEST_CASE("inverse_unimodular") {
    IntMatrix u = IntMatrix::from_rows({{1, 2}, {0, 1}});
    IntMatrix inv = inverse_unimodular(u);
    CHECK((u * inv).is_identity());
    CHECK((inv * u).is_identity());
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})), DomainError);
}

TEST_CASE("kernel_basis spans the right kernel") {
    IntMatrix a = IntMatrix::from_rows({{1, 1, 1}});
    auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(vec_is_zero(a.apply(v)));

    auto rng = make_rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix m = rand_matrix(rng, 2, 4, 5);
        for (const auto& v : kernel_basis(m)) {
            CHECK(!vec_is_zero(v));
            CHECK(vec_is_zero(m.apply(v)));
        }
    }
}
