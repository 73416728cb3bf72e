#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummercalc/abelian.hpp"
#include "test_helpers.hpp"

using namespace kummer;
using kummer::testing::make_rng;
using kummer::testing::rand_matrix;

TEST_CASE("group canonicalization") {
    auto g = FiniteAbelianGroup::from_moduli({Int(2), Int(3)});
    CHECK(g.invariant_factors() == std::vector<Int>{Int(6)});
    auto h = FiniteAbelianGroup::from_moduli({Int(4), Int(6)});
    CHECK(h.invariant_factors() == std::vector<Int>{Int(2), Int(12)});
    CHECK(FiniteAbelianGroup::from_moduli({Int(1), Int(1)}).is_trivial());
    CHECK_THROWS_AS(FiniteAbelianGroup::from_invariant_factors({Int(2), Int(3)}), DomainError);
    CHECK(h.order() == 24);
    CHECK(h.exponent() == 12);
}

TEST_CASE("element arithmetic reduces coordinates") {
    auto g = FiniteAbelianGroup::from_invariant_factors({Int(4), Int(12)});
    auto e = g.element({5, -1});
    CHECK(e.coords() == Vec{Int(1), Int(11)});
    CHECK((e + e).coords() == Vec{Int(2), Int(10)});
    CHECK((e - e).is_zero());
    CHECK((-e + e).is_zero());
}

TEST_CASE("element_order") {
    auto z6 = FiniteAbelianGroup::from_invariant_factors({Int(6)});
    CHECK(element_order(z6.zero()) == 1);
    CHECK(element_order(z6.element({1})) == 6);
    auto g = FiniteAbelianGroup::from_invariant_factors({Int(4), Int(12)});
    // (2,3) in Z/4 x Z/12: lcm(2,4) = 4 (brute-force checked below)
    auto e = g.element({2, 3});
    CHECK(element_order(e) == 4);
}

TEST_CASE("element_order matches its definition on random elements") {
    auto rng = make_rng(17);
    auto g = FiniteAbelianGroup::from_invariant_factors({Int(2), Int(4), Int(24)});
    for (const auto& e : g.all_elements()) {
        Int n = element_order(e);
        CHECK((e * n).is_zero());
        // minimality: no proper prime quotient of n kills e
        for (Int p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            CHECK(!(e * (n / p)).is_zero());
        }
    }
    (void)rng;
}

TEST_CASE("cokernel: multiplication by n on Z") {
    IntMatrix a(1, 1);
    a.at(0, 0) = 6;
    auto c = cokernel(a);
    CHECK(c.free_rank == 0);
    CHECK(c.torsion.invariant_factors() == std::vector<Int>{Int(6)});
}

TEST_CASE("cokernel: diagonal embedding Z -> Z^2 leaves free rank 1") {
    // quotient Z^2 / <(1,1)> ~ Z via the basis change (x,y) -> (x, y-x)
    IntMatrix a = IntMatrix::from_rows({{1}, {1}});
    auto c = cokernel(a);
    CHECK(c.torsion.is_trivial());
    CHECK(c.free_rank == 1);
}

TEST_CASE("cokernel: n times identity") {
    for (int n : {2, 3, 5}) {
        IntMatrix a = IntMatrix::identity(3);
        for (std::size_t i = 0; i < 3; ++i) a.at(i, i) = n;
        auto c = cokernel(a);
        CHECK(c.free_rank == 0);
        CHECK(c.torsion.invariant_factors() == std::vector<Int>(3, Int(n)));
    }
}

TEST_CASE("cokernel is invariant under unimodular scrambling") {
    auto rng = make_rng(31);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix a = rand_matrix(rng, 3, 3, 8);
        IntMatrix b = a;
        b.add_row_multiple(0, 1, Int(2));
        b.add_col_multiple(2, 0, Int(-3));
        b.swap_rows(1, 2);
        auto ca = cokernel(a), cb = cokernel(b);
        CHECK(ca.torsion == cb.torsion);
        CHECK(ca.free_rank == cb.free_rank);
    }
}

TEST_CASE("qmodz canonical form and order") {
    CHECK(QmodZ().order() == 1);
    CHECK(QmodZ(Int(1), Int(2)).order() == 2);
    QmodZ q(Int(4), Int(6)); // canonicalizes to 2/3
    CHECK(q.num() == 2);
    CHECK(q.den() == 3);
    CHECK(q.order() == 3);
    CHECK(QmodZ(Int(-1), Int(4)) == QmodZ(Int(3), Int(4)));
    CHECK(QmodZ(Int(7), Int(7)).is_zero());
}

TEST_CASE("qmodz arithmetic") {
    QmodZ half(Int(1), Int(2)), third(Int(1), Int(3));
    CHECK((half + half).is_zero());
    CHECK(half + third == QmodZ(Int(5), Int(6)));
    CHECK(-third == QmodZ(Int(2), Int(3)));
    CHECK(half * Int(3) == half);
    CHECK(QmodZ::parse("3/4") == QmodZ(Int(3), Int(4)));
    CHECK(QmodZ::parse("3/4").to_string() == "3/4");
    CHECK_THROWS_AS(QmodZ::parse("x/y"), ConfigError);
}
