#include <doctest.h>

#include <algorithm>

#include "itg/classify.hpp"
#include "itg/isogeny.hpp"
#include "oracles.hpp"

using namespace itg;

namespace {

Curve random_curve(long bound) {
    for (;;) {
        std::array<Rational, 5> a;
        for (auto& x : a) x = oracle::uniform(-bound, bound);
        try {
            return curve(a);
        } catch (const SingularCurve&) {
        }
    }
}

std::vector<std::string> sorted_torsion(const IsogenyClass& c) {
    std::vector<std::string> out;
    for (const auto& t : c.torsion) out.push_back(t.shape.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> sorted_j(const IsogenyClass& c) {
    std::vector<Rational> out;
    for (const auto& E : c.curves) out.push_back(E.j);
    std::sort(out.begin(), out.end());
    return out;
}

std::multiset<int> degrees(const IsogenyClass& c) {
    std::multiset<int> out;
    for (const auto& e : c.edges) out.insert(e.degree);
    return out;
}

}  // namespace

TEST_CASE("rational kernels") {
    CHECK(rational_kernels(short_curve(1, 0), 2).size() == 1);
    CHECK(rational_kernels(short_curve(-1, 0), 2).size() == 3);
    CHECK(rational_kernels(curve(0, -1, 1, 0, 0), 5).size() >= 1);
    CHECK(rational_kernels(short_curve(0, 16), 3).size() == 2);  // middle of the 27-chain
    CHECK(rational_kernels(short_curve(-1, 0), 3).empty());
    CHECK_THROWS_AS(rational_kernels(short_curve(-1, 0), 11), std::invalid_argument);
}

TEST_CASE("kernel polynomials divide the division polynomial") {
    for (const Curve& E : {curve(0, -1, 1, 0, 0), curve(1, -1, 1, -1, -14), short_curve(0, 16)})
        for (int ell : {2, 3, 5, 7}) {
            for (const auto& K : rational_kernels(E, ell)) {
                CHECK(K.degree == ell);
                CHECK(K.poly.degree() == (ell == 2 ? 1 : (ell - 1) / 2));
                CHECK((division_polynomial(K.base, ell) % K.poly).is_zero());
                CHECK(gcd(K.poly, K.poly.derivative()).degree() == 0);
            }
        }
}

TEST_CASE("property: kernels at a vertex match its edges") {
    for (const Curve& E : {curve(1, -1, 1, -1, -14), short_curve(0, 16), curve(0, -1, 1, 0, 0), curve(1, 0, 1, -1, -2)}) {
        IsogenyClass c = isogeny_class(E);
        for (int k = 0; k < c.size(); ++k)
            for (int ell : {2, 3, 5, 7}) {
                int edges = 0;
                for (const auto& e : c.edges) edges += e.degree == ell && (e.i == k || e.j == k);
                CHECK(static_cast<int>(rational_kernels(c.curves[k], ell).size()) == edges);
            }
    }
}

TEST_CASE("2-isogeny agrees with the classical formula") {
    // y^2 = x^3 + a x^2 + b x  ->  y^2 = x^3 - 2a x^2 + (a^2 - 4b) x
    for (auto [a, b] : {std::pair{1, 2}, {3, -5}, {-2, 7}, {0, 3}}) {
        Curve E = curve(0, a, 0, b, 0);
        Curve expected = curve(0, -2 * a, 0, a * a - 4 * b, 0);
        bool found = false;
        for (const auto& K : rational_kernels(E, 2)) found = found || is_isomorphic_over_Q(velu(E, K), expected);
        CHECK(found);
    }
}

TEST_CASE("Velu codomains are isogenous: equal point counts, dual returns") {
    for (const Curve& E : {curve(0, -1, 1, 0, 0), curve(1, -1, 1, -1, -14), short_curve(0, 16), short_curve(-1, 0)})
        for (int ell : {2, 3, 5, 7}) {
            for (const auto& K : rational_kernels(E, ell)) {
                Curve F = velu(E, K);
                ShortModel ME = minimal_short_model(E), MF = minimal_short_model(F);
                // isogenous curves share their bad primes
                for (long p : good_primes(ME, 8, 11))
                    CHECK(oracle::count_points(ME.A, ME.B, p) == oracle::count_points(MF.A, MF.B, p));
                bool back = false;
                for (const auto& L : rational_kernels(F, ell)) back = back || is_isomorphic_over_Q(velu(F, L), E);
                CHECK(back);
            }
        }
}

TEST_CASE("sporadic isogenies") {
    auto e11 = sporadic_isogenies(curve_from_j(Rational(-11) * 131 * 131 * 131));
    REQUIRE(e11.size() == 1);
    CHECK(e11[0].ell == 11);
    CHECK(e11[0].codomain.j == -121);

    auto e43 = sporadic_isogenies(curve_from_j(Rational(-884736000)));
    REQUIRE(e43.size() == 1);
    CHECK(e43[0].ell == 43);
    CHECK(e43[0].codomain.j == -884736000);
    CHECK_FALSE(is_isomorphic_over_Q(e43[0].codomain, curve_from_j(Rational(-884736000))));

    CHECK(sporadic_isogenies(curve_from_j(Rational(12345, 7))).empty());
    CHECK(sporadic_table().size() == 11);
}

TEST_CASE("isogeny class of 17a") {
    IsogenyClass c = isogeny_class(curve(1, -1, 1, -1, -14));
    CHECK(c.size() == 4);
    CHECK(degrees(c) == std::multiset<int>{2, 2, 2});
    CHECK(sorted_torsion(c) == std::vector<std::string>{"[2,2]", "[2]", "[4]", "[4]"});
    CHECK(is_isomorphic_over_Q(c.curves[0], curve(1, -1, 1, -1, -14)));
}

TEST_CASE("5-isogeny chain") {
    IsogenyClass c = isogeny_class(curve(0, -1, 1, 0, 0));
    CHECK(c.size() == 3);
    CHECK(degrees(c) == std::multiset<int>{5, 5});
    CHECK(sorted_torsion(c) == std::vector<std::string>{"[1]", "[5]", "[5]"});
}

TEST_CASE("27-chain through j = 0") {
    IsogenyClass c = isogeny_class(short_curve(0, 16));
    CHECK(c.size() == 4);
    CHECK(degrees(c) == std::multiset<int>{3, 3, 3});
    CHECK(sorted_j(c) == std::vector<Rational>{-12288000, -12288000, 0, 0});
}

TEST_CASE("property: class is independent of the starting vertex") {
    int checked = 0;
    for (int trial = 0; checked < 15 && trial < 200; ++trial) {
        Curve E = random_curve(12);
        IsogenyClass c = isogeny_class(E);
        if (c.size() == 1 && trial % 4) continue;  // favour nontrivial classes
        ++checked;
        for (int k = 1; k < c.size(); ++k) {
            IsogenyClass d = isogeny_class(c.curves[k]);
            CHECK(d.size() == c.size());
            CHECK(sorted_torsion(d) == sorted_torsion(c));
            CHECK(sorted_j(d) == sorted_j(c));
            CHECK(degrees(d) == degrees(c));
            CHECK(itg_label(d).label() == itg_label(c).label());
        }
    }
}

TEST_CASE("property: twisting preserves the isogeny graph") {
    for (int trial = 0; trial < 15; ++trial) {
        Curve E = random_curve(12);
        IsogenyClass c = isogeny_class(E);
        for (long d : {-1L, 2L, -3L, 5L}) {
            IsogenyClass t = isogeny_class(quadratic_twist(E, d));
            CHECK(t.size() == c.size());
            CHECK(degrees(t) == degrees(c));
            CHECK(shape_label(t).to_string() == shape_label(c).to_string());
            CHECK(sorted_j(t) == sorted_j(c));
        }
    }
}

TEST_CASE("property: classes never exceed Kenku's bound") {
    for (int trial = 0; trial < 30; ++trial) {
        IsogenyClass c = isogeny_class(random_curve(20));
        CHECK(c.size() <= 8);
        CHECK(kenku_audit(c).ok());
        for (int i = 0; i < c.size(); ++i)
            for (int j = i + 1; j < c.size(); ++j) CHECK_FALSE(is_isomorphic_over_Q(c.curves[i], c.curves[j]));
    }
}
