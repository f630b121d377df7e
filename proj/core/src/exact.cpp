#include "itg/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace itg {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& u) {
        size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string u) { return (!u.empty() && u[0] == '+') ? u.substr(1) : u; };
    size_t slash = t.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(t)) throw std::invalid_argument("bad rational: " + s);
        return Rational(Integer(strip_plus(t)));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("bad rational: " + s);
    Integer d(strip_plus(den));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(Integer(strip_plus(num)), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- PolyQ

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational PolyQ::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational PolyQ::eval(const Rational& x) const {
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

PolyQ PolyQ::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

PolyQ PolyQ::compose(const PolyQ& q) const {
    PolyQ r;
    for (size_t i = c_.size(); i-- > 0;) {
        r *= q;
        r += constant(c_[i]);
    }
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        bool neg = sgn(a) < 0;
        Rational mag = neg ? Rational(-a) : a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
PolyQ operator-(const PolyQ& a) { return a * Rational(-1); }
PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ r = a;
    return r *= b;
}
PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }

PolyQ pow(const PolyQ& a, unsigned e) {
    PolyQ r = PolyQ::constant(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("PolyQ division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {PolyQ(), a};
    std::vector<Rational> quo(a.degree() - db + 1);
    Rational inv = 1 / b.leading();
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational c = rem[i] * inv;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * bc[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).first; }
PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    // work on primitive integer parts to keep coefficient growth in check
    PolyQ x = a.is_zero() ? a : from_integer_coeffs(primitive_part(a));
    PolyQ y = b.is_zero() ? b : from_integer_coeffs(primitive_part(b));
    while (!y.is_zero()) {
        PolyQ r = x % y;
        x = std::move(y);
        y = r.is_zero() ? r : from_integer_coeffs(primitive_part(r));
    }
    return x.monic();
}

std::vector<Integer> primitive_part(const PolyQ& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.push_back(n);
    }
    if (sgn(v.back()) < 0) g = -g;
    for (auto& n : v) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    return v;
}

PolyQ from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> v;
    v.reserve(c.size());
    for (const auto& n : c) v.emplace_back(n);
    return PolyQ(std::move(v));
}

// ------------------------------------------------------------- PolyModM

PolyModM::PolyModM(Integer modulus, std::vector<Integer> coeffs)
    : m_(std::move(modulus)), c_(std::move(coeffs)) {
    if (m_ < 2) throw std::invalid_argument("PolyModM: modulus must be >= 2");
    normalize();
}

PolyModM::PolyModM(Integer modulus, const std::vector<Integer>& coeffs, bool reduce)
    : m_(std::move(modulus)), c_(coeffs) {
    if (m_ < 2) throw std::invalid_argument("PolyModM: modulus must be >= 2");
    if (reduce) {
        normalize();
    } else {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
}

void PolyModM::normalize() {
    for (auto& c : c_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m_.get_mpz_t());
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer PolyModM::eval(const Integer& x) const {
    Integer r = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        r = r * x + c_[i];
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
    }
    return r;
}

PolyModM PolyModM::operator+(const PolyModM& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyModM(m_, std::move(r));
}

PolyModM PolyModM::operator-(const PolyModM& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return PolyModM(m_, std::move(r));
}

PolyModM PolyModM::operator*(const PolyModM& o) const {
    if (c_.empty() || o.c_.empty()) return PolyModM(m_, {});
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
    return PolyModM(m_, std::move(r));
}

PolyModM PolyModM::scaled(const Integer& c) const {
    std::vector<Integer> r = c_;
    for (auto& a : r) a *= c;
    return PolyModM(m_, std::move(r));
}

std::pair<PolyModM, PolyModM> PolyModM::divmod(const PolyModM& d) const {
    if (d.is_zero()) throw std::domain_error("PolyModM division by zero");
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), d.c_.back().get_mpz_t(), m_.get_mpz_t()))
        throw std::domain_error("PolyModM: leading coefficient not invertible");
    std::vector<Integer> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {PolyModM(m_, {}), *this};
    std::vector<Integer> quo(degree() - dd + 1);
    for (int i = degree(); i >= dd; --i) {
        mpz_fdiv_r(rem[i].get_mpz_t(), rem[i].get_mpz_t(), m_.get_mpz_t());
        if (rem[i] == 0) continue;
        Integer c = rem[i] * inv;
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m_.get_mpz_t());
        quo[i - dd] = c;
        for (int j = 0; j <= dd; ++j) mpz_submul(rem[i - dd + j].get_mpz_t(), c.get_mpz_t(), d.c_[j].get_mpz_t());
    }
    return {PolyModM(m_, std::move(quo)), PolyModM(m_, std::move(rem))};
}

std::vector<Integer> PolyModM::symmetric() const {
    std::vector<Integer> r = c_;
    Integer half = m_ / 2;
    for (auto& a : r)
        if (a > half) a -= m_;
    return r;
}

// ------------------------------------------------------------- integers

namespace {

Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (unsigned long c = 1;; ++c) {
        Integer y = rng.get_z_range(n), g = 1, q = 1, x, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    f(y);
                    Integer d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n0) {
    if (n0 == 0) throw std::invalid_argument("factor_integer: zero");
    Integer n = abs(n0);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, int>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero");
    Integer d = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) d *= p;
    return d;
}

bool rational_root_exact(const Rational& q, unsigned k, Rational* out) {
    if (k == 0) return false;
    if (sgn(q) < 0 && k % 2 == 0) return false;
    Integer num = abs(q.get_num()), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), k)) return false;
    if (out) {
        *out = Rational(sgn(q) < 0 ? Integer(-rn) : rn, rd);
        out->canonicalize();
    }
    return true;
}

bool is_square(const Rational& q) { return rational_root_exact(q, 2, nullptr); }

}  // namespace itg
