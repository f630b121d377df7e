#include "itg/curve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "curve_internal.hpp"

namespace itg {

Curve curve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6) {
    Curve E;
    E.a1 = a1;
    E.a2 = a2;
    E.a3 = a3;
    E.a4 = a4;
    E.a6 = a6;
    E.b2 = a1 * a1 + 4 * a2;
    E.b4 = 2 * a4 + a1 * a3;
    E.b6 = a3 * a3 + 4 * a6;
    E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    E.c4 = E.b2 * E.b2 - 24 * E.b4;
    E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
    E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
    if (E.disc == 0) throw SingularCurve("singular Weierstrass model " + E.to_string());
    E.j = E.c4 * E.c4 * E.c4 / E.disc;
    return E;
}

Curve curve(const std::array<Rational, 5>& a) { return curve(a[0], a[1], a[2], a[3], a[4]); }

Curve short_curve(const Rational& A, const Rational& B) { return curve(0, 0, 0, A, B); }

Curve curve_from_j(const Rational& j) {
    if (j == 0) return short_curve(0, 16);
    if (j == 1728) return short_curve(1, 0);
    Rational k = 1728 - j;
    return short_curve(3 * j * k, 2 * j * k * k);
}

std::string Curve::to_string() const {
    return "[" + itg::to_string(a1) + "," + itg::to_string(a2) + "," + itg::to_string(a3) + "," + itg::to_string(a4) +
           "," + itg::to_string(a6) + "]";
}

namespace {

std::string strip(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

// "x^3+a2*x^2+a4*x+a6" -> coefficients by power
std::map<int, Rational> parse_rhs(const std::string& s) {
    std::map<int, Rational> out;
    std::size_t i = 0;
    if (s.empty()) throw std::invalid_argument("empty right-hand side");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("empty term in " + s);
        Rational coef = 1;
        int power = 0;
        auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string c = term.substr(0, xpos);
            if (!c.empty()) {
                if (c.back() != '*') throw std::invalid_argument("expected '*' in term " + term);
                coef = parse_rational(c.substr(0, c.size() - 1));
            }
            std::string rest = term.substr(xpos + 1);
            if (rest.empty()) {
                power = 1;
            } else if (rest.size() == 2 && rest[0] == '^' && rest[1] >= '0' && rest[1] <= '3') {
                power = rest[1] - '0';
            } else {
                throw std::invalid_argument("bad power in term " + term);
            }
        }
        out[power] += sign * coef;
        i = j;
    }
    return out;
}

}  // namespace

Curve parse_curve(const std::string& input) {
    std::string s = strip(input);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated coefficient list: " + input);
        std::vector<Rational> a;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) a.push_back(parse_rational(item));
        if (a.size() == 2) return short_curve(a[0], a[1]);
        if (a.size() != 5) throw std::invalid_argument("expected 2 or 5 coefficients: " + input);
        return curve(a[0], a[1], a[2], a[3], a[4]);
    }
    if (s.rfind("y^2=", 0) == 0) {
        auto c = parse_rhs(s.substr(4));
        if (c[3] != 1) throw std::invalid_argument("x^3 coefficient must be 1: " + input);
        return curve(0, c[2], 0, c[1], c[0]);
    }
    throw std::invalid_argument("unrecognized curve syntax: " + input);
}

// ------------------------------------------------------------ models

ShortScaling short_scaling(const Curve& E) {
    // y^2 = x^3 - 27 c4 x - 54 c6, then (A, B) -> (u^4 A, u^6 B)
    Rational A = -27 * E.c4, B = -54 * E.c6;
    Integer den = 1;
    mpz_lcm(den.get_mpz_t(), A.get_den_mpz_t(), B.get_den_mpz_t());
    Rational u = den;
    Integer Ai = Rational(A * u * u * u * u).get_num();
    Integer Bi = Rational(B * u * u * u * u * u * u).get_num();
    Integer g;
    if (Ai == 0) {
        g = abs(Bi);
    } else if (Bi == 0) {
        g = abs(Ai);
    } else {
        mpz_gcd(g.get_mpz_t(), Ai.get_mpz_t(), Bi.get_mpz_t());
    }
    Integer w = 1;
    if (g > 1) {
        for (auto& [q, e] : factor_integer(g)) {
            (void)e;
            for (;;) {
                Integer q4 = q * q * q * q, q6 = q4 * q * q;
                if (Ai % q4 == 0 && Bi % q6 == 0) {
                    Ai /= q4;
                    Bi /= q6;
                    w *= q;
                } else {
                    break;
                }
            }
        }
    }
    return {{Ai, Bi}, u / w};
}

ShortModel minimal_short_model(const Curve& E) { return short_scaling(E).model; }

Curve short_form(const Curve& E) {
    auto m = minimal_short_model(E);
    return short_curve(m.A, m.B);
}

Point to_short(const Curve& E, const ShortScaling& s, const Point& P) {
    if (P.infinity) return P;
    Rational X = 36 * P.x + 3 * E.b2;
    Rational Y = 108 * (2 * P.y + E.a1 * P.x + E.a3);
    return Point::affine(X * s.u * s.u, Y * s.u * s.u * s.u);
}

Point from_short(const Curve& E, const ShortScaling& s, const Point& P) {
    if (P.infinity) return P;
    Rational X = P.x / (s.u * s.u);
    Rational Y = P.y / (s.u * s.u * s.u);
    Rational x = (X - 3 * E.b2) / 36;
    Rational y = (Y / 108 - E.a1 * x - E.a3) / 2;
    return Point::affine(x, y);
}

// ------------------------------------------------------------ points

std::string Point::to_string() const {
    if (infinity) return "O";
    return "(" + itg::to_string(x) + "," + itg::to_string(y) + ")";
}

bool on_curve(const Curve& E, const Point& P) {
    if (P.infinity) return true;
    const Rational &x = P.x, &y = P.y;
    return y * y + E.a1 * x * y + E.a3 * y == x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
}

Point neg(const Curve& E, const Point& P) {
    if (P.infinity) return P;
    return Point::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

Point add(const Curve& E, const Point& P, const Point& Q) {
    if (!on_curve(E, P) || !on_curve(E, Q)) throw std::invalid_argument("add: point not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda, nu;
    if (P.x == Q.x) {
        Rational den = P.y + Q.y + E.a1 * Q.x + E.a3;
        if (den == 0) return Point::zero();
        Rational d = 2 * P.y + E.a1 * P.x + E.a3;
        lambda = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4 - E.a1 * P.y) / d;
        nu = (-P.x * P.x * P.x + E.a4 * P.x + 2 * E.a6 - E.a3 * P.y) / d;
    } else {
        Rational dx = Q.x - P.x;
        lambda = (Q.y - P.y) / dx;
        nu = (P.y * Q.x - Q.y * P.x) / dx;
    }
    Rational x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
    Rational y3 = -(lambda + E.a1) * x3 - nu - E.a3;
    return Point::affine(x3, y3);
}

Point mul(const Curve& E, long n, const Point& P) {
    if (!on_curve(E, P)) throw std::invalid_argument("mul: point not on curve");
    Point base = n < 0 ? neg(E, P) : P;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Point r = Point::zero();
    while (k) {
        if (k & 1) r = add(E, r, base);
        k >>= 1;
        if (k) base = add(E, base, base);
    }
    return r;
}

int point_order(const Curve& E, const Point& P, int limit) {
    Point Q = P;
    for (int n = 1; n <= limit; ++n) {
        if (Q.infinity) return n;
        Q = add(E, Q, P);
    }
    return 0;
}

// ------------------------------------------------------------ division polynomials

PolyQ division_polynomial(const Curve& E, int n) {
    if (n < 1) throw std::invalid_argument("division_polynomial: n must be >= 1");
    const PolyQ x = PolyQ::x();
    const PolyQ F({E.b6, 2 * E.b4, E.b2, Rational(4)});
    const PolyQ F2 = F * F;
    std::vector<PolyQ> f(std::max(n + 1, 5));
    f[0] = PolyQ();
    f[1] = PolyQ::constant(1);
    f[2] = PolyQ::constant(1);
    f[3] = PolyQ({E.b8, 3 * E.b6, 3 * E.b4, E.b2, Rational(3)});
    f[4] = PolyQ({E.b4 * E.b8 - E.b6 * E.b6, E.b2 * E.b8 - E.b4 * E.b6, 10 * E.b8, 10 * E.b6, 5 * E.b4, E.b2,
                  Rational(2)});
    for (int k = 5; k <= n; ++k) {
        int m = k / 2;
        if (k % 2 == 0) {
            f[k] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
        } else if (m % 2 == 0) {
            f[k] = F2 * f[m + 2] * f[m] * f[m] * f[m] - f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
        } else {
            f[k] = f[m + 2] * f[m] * f[m] * f[m] - F2 * f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
        }
    }
    if (n % 2 == 0) return F * f[n];
    return f[n];
}

// ------------------------------------------------------------ twists, isomorphism

Curve quadratic_twist(const Curve& E, const Integer& d) {
    if (d == 0) throw std::invalid_argument("quadratic_twist: d must be nonzero");
    Integer s = squarefree_part(d);
    auto m = minimal_short_model(E);
    return short_curve(Rational(m.A * s * s), Rational(m.B * s * s * s));
}

bool is_isomorphic_over_Q(const Curve& E, const Curve& F) {
    if (E.j != F.j) return false;
    // compare (c4, c6) up to (u^4, u^6)
    if (E.c4 == 0) {
        Rational r = F.c6 / E.c6;
        return rational_root_exact(r, 6, nullptr);
    }
    if (E.c6 == 0) {
        Rational r = F.c4 / E.c4;
        return rational_root_exact(r, 4, nullptr);
    }
    Rational v = (F.c6 / E.c6) * (E.c4 / F.c4);  // u^2
    if (!is_square(v)) return false;
    return v * v == F.c4 / E.c4;
}

}  // namespace itg
