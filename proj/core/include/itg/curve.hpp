#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "itg/exact.hpp"
#include "itg/graph.hpp"

namespace itg {

class SingularCurve : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct Curve {
    Rational a1, a2, a3, a4, a6;
    Rational b2, b4, b6, b8, c4, c6, disc, j;

    std::array<Rational, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
    std::string to_string() const;
};

Curve curve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6);
Curve curve(const std::array<Rational, 5>& a);
// y^2 = x^3 + A x + B
Curve short_curve(const Rational& A, const Rational& B);
// j = 0: y^2 = x^3 + 16; j = 1728: y^2 = x^3 + x;
// otherwise y^2 = x^3 + 3j(1728-j) x + 2j(1728-j)^2.
Curve curve_from_j(const Rational& j);
// "[a1,a2,a3,a4,a6]", "[a4,a6]" or "y^2=x^3+A*x+B"
Curve parse_curve(const std::string& s);

// Integral short model y^2 = x^3 + A x + B isomorphic to E, with no u > 1
// such that u^4 | A and u^6 | B.  Canonical up to Q-isomorphism except that
// it does not choose among twists.
struct ShortModel {
    Integer A, B;
};
ShortModel minimal_short_model(const Curve& E);
Curve short_form(const Curve& E);

struct Point {
    bool infinity = true;
    Rational x, y;

    static Point zero() { return {}; }
    static Point affine(const Rational& x, const Rational& y) { return {false, x, y}; }
    bool operator==(const Point&) const = default;
    std::string to_string() const;
};

bool on_curve(const Curve& E, const Point& P);
Point neg(const Curve& E, const Point& P);
Point add(const Curve& E, const Point& P, const Point& Q);
Point mul(const Curve& E, long n, const Point& P);
// Smallest n >= 1 with nP = 0, or 0 if none up to `limit`.
int point_order(const Curve& E, const Point& P, int limit = 12);

// f_n for odd n, F * f_n for even n, where F = 4x^3 + b2 x^2 + 2 b4 x + b6.
// Roots are the x-coordinates of the nonzero points of order dividing n.
PolyQ division_polynomial(const Curve& E, int n);

struct RationalTorsion {
    TorsionShape shape;
    std::vector<Point> generators;
};
RationalTorsion torsion_subgroup(const Curve& E);

// #E(F_p) for a prime p >= 5 not dividing the discriminant of the
// minimal short model.
long count_points(const ShortModel& M, long p);
// Primes p >= 5 of good reduction for the short model, ascending.
std::vector<long> good_primes(const ShortModel& M, int count, long start = 5);

Curve quadratic_twist(const Curve& E, const Integer& d);
bool is_isomorphic_over_Q(const Curve& E, const Curve& F);

}  // namespace itg
