#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with src/ beyond GMP itself.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline std::vector<Z> divisors(Z n) {
    n = abs(n);
    std::vector<Z> out;
    if (n == 0) return out;
    for (Z d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Rational roots of an integer polynomial (lowest degree first) by testing
// every candidate +-p/q, p | a_0, q | a_n.  Zero handled separately.
inline std::vector<Q> rational_roots(std::vector<Z> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::set<Q> roots;
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0 && shift < c.size()) roots.insert(0);
    c.erase(c.begin(), c.begin() + shift);
    if (c.size() >= 2) {
        for (const Z& p : divisors(c.front()))
            for (const Z& q : divisors(c.back()))
                for (int s : {1, -1}) {
                    Q r(s * p, q);
                    r.canonicalize();
                    Q v = 0;
                    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
                    if (v == 0) roots.insert(r);
                }
    }
    return {roots.begin(), roots.end()};
}

// Points of y^2 = x^3 + A x + B (A, B integers) as (x, y); nullopt is O.
using Pt = std::optional<std::pair<Q, Q>>;

inline Pt add(const Z& A, const Pt& P, const Pt& R) {
    if (!P) return R;
    if (!R) return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *R;
    Q m;
    if (x1 == x2) {
        if (y1 + y2 == 0) return std::nullopt;
        m = (3 * x1 * x1 + A) / (2 * y1);
    } else {
        m = (y2 - y1) / (x2 - x1);
    }
    Q x3 = m * m - x1 - x2;
    Q y3 = m * (x1 - x3) - y1;
    return std::make_pair(x3, y3);
}

// Order of P if at most `limit`, else 0.
inline int order(const Z& A, const Pt& P, int limit = 12) {
    Pt R = P;
    for (int n = 1; n <= limit; ++n) {
        if (!R) return n;
        R = add(A, R, P);
    }
    return 0;
}

// Prime factorization of |n| > 0 by trial division.
inline std::vector<std::pair<Z, int>> factor(Z n) {
    n = abs(n);
    std::vector<std::pair<Z, int>> out;
    for (Z p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// Positive y with y^2 | n.
inline std::vector<Z> square_divisor_roots(const Z& n) {
    std::vector<Z> out{1};
    for (const auto& [p, e] : factor(n)) {
        std::vector<Z> next;
        for (const Z& y : out) {
            Z m = y;
            for (int k = 0; 2 * k <= e; ++k, m *= p) next.push_back(m);
        }
        out = std::move(next);
    }
    return out;
}

// Integer roots of x^3 + A x + C, by bisection on monotone pieces.
inline std::vector<Z> cubic_integer_roots(const Z& A, const Z& C) {
    auto f = [&](const Z& x) -> Z { return x * x * x + A * x + C; };
    Z M = 1 + (abs(A) > abs(C) ? abs(A) : abs(C));
    std::vector<Z> cuts{-M};
    if (A < 0) {
        Z s = sqrt(Z(-A / 3));  // floor of sqrt(-A/3) or near it
        for (Z c : {Z(-s - 1), Z(-s), Z(s), Z(s + 1)})
            if (c > cuts.back() && c < M) cuts.push_back(c);
    }
    cuts.push_back(M);
    std::set<Z> roots;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Z lo = cuts[k], hi = cuts[k + 1];
        for (Z x = lo; x <= hi && x < lo + 3; ++x)
            if (f(x) == 0) roots.insert(x);
        bool inc = f(hi) >= f(lo);
        while (hi - lo > 1) {
            Z mid = (lo + hi) / 2;
            Z v = f(mid);
            if (v == 0) {
                roots.insert(mid);
                break;
            }
            if ((v < 0) == inc) lo = mid;
            else hi = mid;
        }
        if (f(lo) == 0) roots.insert(lo);
        if (f(hi) == 0) roots.insert(hi);
    }
    return {roots.begin(), roots.end()};
}

// Lutz-Nagell: torsion points of an integral short model have integer
// coordinates with y = 0 or y^2 | 4A^3 + 27B^2.  Returns (a, b) with
// E(Q)_tors = Z/a x Z/b, a | b.
inline std::pair<int, int> torsion_lutz_nagell(const Z& A, const Z& B) {
    const Z D = 4 * A * A * A + 27 * B * B;
    std::vector<Z> ys{0};
    for (const Z& y : square_divisor_roots(D)) ys.push_back(y);
    std::vector<Pt> torsion{std::nullopt};
    for (const Z& y : ys) {
        for (const Z& x : cubic_integer_roots(A, B - y * y)) {
            for (int s : {1, -1}) {
                if (y == 0 && s < 0) continue;
                Pt P = std::make_pair(Q(x), Q(s * y));
                if (order(A, P) > 0) torsion.push_back(P);
            }
        }
    }
    int n = static_cast<int>(torsion.size());
    int two = 0;
    for (const auto& P : torsion)
        if (order(A, P) == 2) ++two;
    if (two == 3) return {2, n / 2};
    return {1, n};
}

// Integral short model y^2 = x^3 - 27 c4 x - 54 c6 of a long model.
inline std::pair<Z, Z> short_integral(const std::array<Z, 5>& a) {
    const Z &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    Z b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    Z c4 = b2 * b2 - 24 * b4;
    Z c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    return {-27 * c4, -54 * c6};
}

// #E(F_p) for y^2 = x^3 + A x + B by counting square roots, p odd.
inline long count_points(const Z& A, const Z& B, long p) {
    std::vector<int> sq(p, 0);
    for (long y = 0; y < p; ++y) ++sq[(y * y) % p];
    long a = mpz_class(((A % p) + p) % p).get_si(), b = mpz_class(((B % p) + p) % p).get_si();
    long n = 1;
    for (long x = 0; x < p; ++x) n += sq[((x * x % p) * x + a * x + b) % p];
    return n;
}

// |GL(2, Z/NZ)| by enumeration.
inline std::uint64_t gl2_order(int n) {
    std::uint64_t c = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int d = 0; d < n; ++d) {
                    int det = ((a * d - b * cc) % n + n) % n;
                    int g = n, x = det;
                    while (x) {
                        int t = g % x;
                        g = x;
                        x = t;
                    }
                    if (g == 1) ++c;
                }
    return c;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x17a4);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace oracle
