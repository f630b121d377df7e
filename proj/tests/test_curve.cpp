#include <doctest.h>

#include "itg/curve.hpp"
#include "itg/families.hpp"
#include "oracles.hpp"

using namespace itg;

namespace {

Curve random_curve(long bound) {
    for (;;) {
        std::array<Rational, 5> a;
        for (auto& x : a) x = oracle::uniform(-bound, bound);
        if (oracle::uniform(0, 2) == 0) a[0] = a[1] = a[2] = 0;
        try {
            return curve(a);
        } catch (const SingularCurve&) {
        }
    }
}

std::pair<int, int> oracle_torsion(const Curve& E) {
    std::array<oracle::Z, 5> a;
    for (int k = 0; k < 5; ++k) a[k] = E.ainvs()[k].get_num();
    auto [A, B] = oracle::short_integral(a);
    return oracle::torsion_lutz_nagell(A, B);
}

}  // namespace

TEST_CASE("invariants and j") {
    CHECK(short_curve(0, 16).j == 0);
    CHECK(short_curve(-1, 0).j == 1728);
    Curve E = curve(1, -1, 1, -1, -14);
    CHECK(E.c4 * E.c4 * E.c4 - E.c6 * E.c6 == 1728 * E.disc);
    CHECK(E.j == E.c4 * E.c4 * E.c4 / E.disc);
    CHECK_THROWS_AS(short_curve(0, 0), SingularCurve);
    CHECK_THROWS_AS(short_curve(-3, 2), SingularCurve);
}

TEST_CASE("curves from j") {
    for (Rational j : {Rational(0), Rational(1728), Rational(-11 * 131 * 131 * 131), Rational(-25, 2)}) {
        CHECK(curve_from_j(j).j == j);
    }
    CHECK(curve_from_j(0).ainvs() == short_curve(0, 16).ainvs());
}

TEST_CASE("parsing curves") {
    CHECK(parse_curve("[1,-1,1,-1,-14]").ainvs() == curve(1, -1, 1, -1, -14).ainvs());
    CHECK(parse_curve("[-1,0]").ainvs() == short_curve(-1, 0).ainvs());
    CHECK(parse_curve("y^2=x^3-x").ainvs() == short_curve(-1, 0).ainvs());
    CHECK(parse_curve("y^2 = x^3 + 16").ainvs() == short_curve(0, 16).ainvs());
    CHECK(parse_curve("y^2=x^3+1/2*x-3").ainvs() == short_curve(Rational(1, 2), -3).ainvs());
    CHECK_THROWS_AS(parse_curve("[1,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve("[1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve("x^2"), std::invalid_argument);
}

TEST_CASE("group law") {
    Curve E = short_curve(4, 0);
    Point P = Point::affine(2, 4);
    CHECK(on_curve(E, P));
    CHECK(add(E, P, Point::zero()) == P);
    CHECK(mul(E, 2, P) == Point::affine(0, 0));
    CHECK(add(E, P, neg(E, P)) == Point::zero());

    Curve F = curve(0, -1, 1, 0, 0);
    Point Q = Point::affine(0, 0);
    CHECK(on_curve(F, Q));
    CHECK(mul(F, 5, Q) == Point::zero());
    CHECK(point_order(F, Q) == 5);
}

TEST_CASE("division polynomials") {
    CHECK(division_polynomial(short_curve(2, 3), 2) == PolyQ({12, 8, 0, 4}));
    CHECK(division_polynomial(short_curve(1, 0), 3) == PolyQ({-1, 0, 6, 0, 3}));
    for (int n : {3, 5, 7, 9}) CHECK(division_polynomial(short_curve(-2, 5), n).degree() == (n * n - 1) / 2);
    // every torsion x-coordinate is a root
    Curve F = curve(0, -1, 1, 0, 0);
    Point Q = Point::affine(0, 0);
    for (int k = 1; k < 5; ++k) CHECK(division_polynomial(F, 5).eval(mul(F, k, Q).x) == 0);
}

TEST_CASE("torsion of known curves") {
    CHECK(torsion_subgroup(curve(0, -1, 1, 0, 0)).shape == TorsionShape{1, 5});
    CHECK(torsion_subgroup(short_curve(-1, 0)).shape == TorsionShape{2, 2});
    CHECK(torsion_subgroup(short_curve(0, 16)).shape == TorsionShape{1, 3});
    CHECK(torsion_subgroup(curve(1, -1, 1, -1, -14)).shape == TorsionShape{1, 4});
    Curve Z12 = family_curve(family_by_name("Z12"), 2);
    CHECK(torsion_subgroup(Z12).shape == TorsionShape{1, 12});
    auto T = torsion_subgroup(Z12);
    REQUIRE(T.generators.size() == 1);
    CHECK(point_order(Z12, T.generators[0]) == 12);
}

TEST_CASE("property: torsion agrees with Lutz-Nagell") {
    for (int trial = 0; trial < 60; ++trial) {
        Curve E = random_curve(20);
        CAPTURE(E.to_string());
        auto [a, b] = oracle_torsion(E);
        auto T = torsion_subgroup(E);
        CHECK(T.shape == TorsionShape{a, b});
        for (const auto& P : T.generators) CHECK(on_curve(E, P));
    }
}

TEST_CASE("property: torsion agrees with Lutz-Nagell on families with large torsion") {
    for (const char* fam : {"Z7", "Z9", "Z10", "Z12"})
        for (long t : {2, 3, -2}) {
            Curve E = family_curve(family_by_name(fam), t);
            // clear denominators with (x, y) -> (x/u^2, y/u^3), then compare
            Curve S = short_form(E);
            ShortModel M = minimal_short_model(S);
            auto [a, b] = oracle::torsion_lutz_nagell(M.A, M.B);
            CHECK(torsion_subgroup(E).shape == TorsionShape{a, b});
        }
}

TEST_CASE("point counts agree with brute force") {
    for (int trial = 0; trial < 20; ++trial) {
        Curve E = random_curve(10);
        ShortModel M = minimal_short_model(E);
        for (long p : good_primes(M, 6)) CHECK(count_points(M, p) == oracle::count_points(M.A, M.B, p));
    }
}

TEST_CASE("quadratic twists") {
    Curve E = short_curve(-1, 0);
    CHECK(is_isomorphic_over_Q(quadratic_twist(E, -1), E));
    CHECK(is_isomorphic_over_Q(quadratic_twist(E, 1), E));
    Curve F = curve(1, -1, 1, -1, -14);
    CHECK_FALSE(is_isomorphic_over_Q(quadratic_twist(F, 5), F));
    CHECK(quadratic_twist(F, 5).j == F.j);
}

TEST_CASE("isomorphism tests") {
    Curve E = short_curve(-7, 10);
    CHECK(is_isomorphic_over_Q(E, short_curve(Rational(-7, 16), Rational(10, 64))));
    CHECK_FALSE(is_isomorphic_over_Q(short_curve(0, 1), short_curve(0, 2)));
    CHECK(is_isomorphic_over_Q(short_curve(0, 1), short_curve(0, 64)));
    CHECK(is_isomorphic_over_Q(short_curve(1, 0), short_curve(16, 0)));
    CHECK_FALSE(is_isomorphic_over_Q(short_curve(1, 0), short_curve(4, 0)));
    CHECK(is_isomorphic_over_Q(curve(1, -1, 1, -1, -14), short_form(curve(1, -1, 1, -1, -14))));
}

TEST_CASE("property: twist invariants") {
    for (int trial = 0; trial < 40; ++trial) {
        Curve E = random_curve(12);
        long d = 0;
        while (d == 0) d = oracle::uniform(-30, 30);
        Integer dd = d;
        Curve Ed = quadratic_twist(E, dd);
        CHECK(Ed.j == E.j);
        CHECK(is_isomorphic_over_Q(quadratic_twist(Ed, dd), E));
        CHECK(is_isomorphic_over_Q(quadratic_twist(E, dd * 9), Ed));
        // the 2-torsion subgroup is a Galois-module invariant of the twist
        CHECK(torsion_subgroup(Ed).shape.primary(2).a == torsion_subgroup(E).shape.primary(2).a);
        bool square = mpz_perfect_square_p(dd.get_mpz_t());
        if (E.j != 0 && E.j != 1728) CHECK(is_isomorphic_over_Q(Ed, E) == square);
    }
}

TEST_CASE("property: minimal short models are canonical") {
    for (int trial = 0; trial < 40; ++trial) {
        Curve E = random_curve(15);
        ShortModel M = minimal_short_model(E);
        long u = oracle::uniform(1, 6);
        Rational u2 = u * u;
        Curve F = short_curve(Rational(M.A) * u2 * u2, Rational(M.B) * u2 * u2 * u2);
        ShortModel N = minimal_short_model(F);
        CHECK(N.A == M.A);
        CHECK(N.B == M.B);
        CHECK(is_isomorphic_over_Q(E, short_curve(Rational(M.A), Rational(M.B))));
    }
}
