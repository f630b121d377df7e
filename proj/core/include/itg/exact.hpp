#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace itg {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n", "p/q"; the result is canonical.
Rational parse_rational(const std::string& s);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Univariate polynomial over Q, coefficients lowest degree first.  The
// coefficient vector never carries trailing zeros.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    PolyQ(std::initializer_list<long> coeffs);

    static PolyQ constant(const Rational& c);
    static PolyQ monomial(const Rational& c, int deg);
    static PolyQ x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    PolyQ derivative() const;
    PolyQ monic() const;
    // p(q(x))
    PolyQ compose(const PolyQ& q) const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rational& c);

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

PolyQ operator+(PolyQ a, const PolyQ& b);
PolyQ operator-(PolyQ a, const PolyQ& b);
PolyQ operator-(const PolyQ& a);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(PolyQ a, const Rational& c);
PolyQ operator*(const Rational& c, PolyQ a);
PolyQ pow(const PolyQ& a, unsigned e);

// Euclidean division; throws on division by zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator/(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);
// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

// Lowest-terms integer polynomial with positive leading coefficient that is
// a rational multiple of p.
std::vector<Integer> primitive_part(const PolyQ& p);
PolyQ from_integer_coeffs(const std::vector<Integer>& c);

// Polynomial with coefficients in Z/mZ, each kept in [0, m).
class PolyModM {
public:
    PolyModM(Integer modulus, std::vector<Integer> coeffs);
    PolyModM(Integer modulus, const std::vector<Integer>& coeffs, bool reduce);

    const Integer& modulus() const { return m_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Integer eval(const Integer& x) const;

    PolyModM operator+(const PolyModM& o) const;
    PolyModM operator-(const PolyModM& o) const;
    PolyModM operator*(const PolyModM& o) const;
    PolyModM scaled(const Integer& c) const;
    // Division by a polynomial with invertible leading coefficient.
    std::pair<PolyModM, PolyModM> divmod(const PolyModM& d) const;
    bool operator==(const PolyModM& o) const { return m_ == o.m_ && c_ == o.c_; }

    // Coefficients lifted to the symmetric range (-m/2, m/2].
    std::vector<Integer> symmetric() const;

private:
    void normalize();
    Integer m_;
    std::vector<Integer> c_;
};

struct QFactor {
    PolyQ poly;  // monic, irreducible over Q
    int multiplicity;
};

std::vector<Rational> rational_roots(const PolyQ& p);
std::vector<QFactor> factor_over_Q(const PolyQ& p);
// Irreducible factors of degree <= max_degree only (each with multiplicity);
// cheaper than a full factorization when the cofactor is large.
std::vector<QFactor> factor_over_Q_upto(const PolyQ& p, int max_degree);

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);
Integer squarefree_part(const Integer& n);
bool is_square(const Rational& q);
// Exact k-th root if q is a k-th power in Q.
bool rational_root_exact(const Rational& q, unsigned k, Rational* out);

}  // namespace itg
