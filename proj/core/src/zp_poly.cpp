#include "zp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace itg::zp {

u64 Field::pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    // accumulate in 128 bits, reduce once per output coefficient
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (unsigned __int128)a[i] * b[j];
    }
    Poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % F.p);
    trim(r);
    return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly* q, Poly* r) {
    if (b.empty()) throw std::domain_error("zp::divmod: division by zero");
    Poly rem = a;
    int db = deg(b);
    u64 inv = F.inv(b.back());
    Poly quo;
    if (deg(rem) >= db) quo.assign(deg(rem) - db + 1, 0);
    for (int i = deg(rem); i >= db; --i) {
        u64 c = F.mul(rem[i], inv);
        if (!c) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]));
    }
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
}

Poly mod(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    divmod(F, a, b, nullptr, &r);
    return r;
}

Poly monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    u64 inv = F.inv(a.back());
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
    return r;
}

Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly xgcd(const Field& F, const Poly& a, const Poly& b, Poly* s, Poly* t) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(F, r0, r1, &q, &r);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        Poly t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) {
        *s = {};
        *t = {};
        return r0;
    }
    u64 inv = F.inv(r0.back());
    Poly lc{inv};
    *s = mul(F, s0, lc);
    *t = mul(F, t0, lc);
    return mul(F, r0, lc);
}

Poly derivative(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
    trim(r);
    return r;
}

Poly powmod(const Field& F, const Poly& base, u64 e, const Poly& m) {
    Poly r{1 % F.p};
    trim(r);
    Poly b = mod(F, base, m);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, b), m);
        e >>= 1;
        if (e) b = mod(F, mul(F, b, b), m);
    }
    return r;
}

u64 eval(const Field& F, const Poly& a, u64 x) {
    u64 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

bool is_squarefree(const Field& F, const Poly& f) {
    Poly d = derivative(F, f);
    if (d.empty()) return deg(f) <= 0;
    return deg(gcd(F, f, d)) == 0;
}

namespace {

Poly random_poly(const Field& F, int degree, std::mt19937_64& rng) {
    Poly r(degree + 1);
    for (auto& c : r) c = rng() % F.p;
    trim(r);
    return r;
}

// (x^(p^k)) sequence based distinct-degree factorization.
std::vector<std::pair<Poly, int>> ddf(const Field& F, Poly f) {
    std::vector<std::pair<Poly, int>> out;
    Poly x{0, 1};
    Poly h = x;
    int d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod(F, h, F.p, f);
        Poly g = gcd(F, f, sub(F, h, x));
        if (deg(g) > 0) {
            out.push_back({g, d});
            Poly q;
            divmod(F, f, g, &q, nullptr);
            f = q;
            h = mod(F, h, f);
        }
    }
    if (deg(f) > 0) out.push_back({monic(F, f), deg(f)});
    return out;
}

void edf(const Field& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (deg(f) == d) {
        out.push_back(monic(F, f));
        return;
    }
    // exponent (p^d - 1)/2 may exceed 64 bits, so raise in stages
    for (;;) {
        Poly a = random_poly(F, deg(f) - 1, rng);
        if (deg(a) < 1) continue;
        Poly g = gcd(F, a, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Poly q;
            divmod(F, f, g, &q, nullptr);
            edf(F, g, d, rng, out);
            edf(F, q, d, rng, out);
            return;
        }
        // b = a^((p^d-1)/2) = a^((p-1)/2) * prod_{i=1}^{d-1} a^(p^i (p-1)/2)
        Poly t = powmod(F, a, (F.p - 1) / 2, f);
        Poly b = t;
        for (int i = 1; i < d; ++i) {
            t = powmod(F, t, F.p, f);
            b = mod(F, mul(F, b, t), f);
        }
        Poly bm1 = sub(F, b, Poly{1});
        g = gcd(F, bm1, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Poly q;
            divmod(F, f, g, &q, nullptr);
            edf(F, g, d, rng, out);
            edf(F, q, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Field& F, const Poly& f, std::mt19937_64& rng) {
    std::vector<Poly> out;
    if (deg(f) <= 0) return out;
    for (auto& [g, d] : ddf(F, monic(F, f))) edf(F, g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<u64> roots(const Field& F, const Poly& f, std::mt19937_64& rng) {
    std::vector<u64> out;
    if (deg(f) <= 0) return out;
    Poly x{0, 1};
    Poly h = powmod(F, x, F.p, f);
    Poly g = gcd(F, f, sub(F, h, x));
    if (deg(g) <= 0) return out;
    std::vector<Poly> lin;
    edf(F, g, 1, rng, lin);
    for (auto& l : lin) out.push_back(F.sub(0, l[0]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace itg::zp
