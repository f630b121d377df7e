// Factorization over Q: squarefree decomposition, factorization modulo a
// good small prime, quadratic Hensel lifting along a factor tree, and
// exhaustive subset recombination.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "itg/exact.hpp"
#include "zp_poly.hpp"

namespace itg {

namespace {

using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// Exact division over Z; false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* q) {
    ZPoly rem = a;
    int da = zdeg(a), db = zdeg(b);
    if (da < db) return false;
    ZPoly quo(da - db + 1);
    const Integer& lb = b.back();
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lb.get_mpz_t());
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
        if (rem[i] != 0) return false;
    if (q) *q = std::move(quo);
    return true;
}

ZPoly zprimitive(ZPoly a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return a;
    if (sgn(a.back()) < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

zp::Poly reduce(const ZPoly& a, std::uint64_t p) {
    zp::Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    zp::trim(r);
    return r;
}

ZPoly lift(const zp::Poly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// One quadratic Hensel step (f = g h mod m, s g + t h = 1 mod m, h monic)
// producing the same relations modulo m^2.
void hensel_step(const ZPoly& f, PolyModM& g, PolyModM& h, PolyModM& s, PolyModM& t, const Integer& m2) {
    PolyModM F(m2, f);
    PolyModM G(m2, g.coeffs()), H(m2, h.coeffs()), S(m2, s.coeffs()), T(m2, t.coeffs());
    PolyModM e = F - G * H;
    auto [q, r] = (S * e).divmod(H);
    PolyModM Gs = G + T * e + q * G;
    PolyModM Hs = H + r;
    PolyModM one(m2, ZPoly{1});
    PolyModM b = S * Gs + T * Hs - one;
    auto [c, d] = (S * b).divmod(Hs);
    PolyModM Ss = S - d;
    PolyModM Ts = T - T * b - c * Gs;
    g = Gs;
    h = Hs;
    s = Ss;
    t = Ts;
}

// Lift f = lc(f) * prod(facs) mod p to modulus M = p^(2^k).
void lift_tree(const ZPoly& f, const std::vector<zp::Poly>& facs, size_t lo, size_t hi, std::uint64_t p,
               const Integer& M, std::vector<PolyModM>& out) {
    const Integer& L = f.back();
    if (hi - lo == 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), L.get_mpz_t(), M.get_mpz_t());
        out.push_back(PolyModM(M, f).scaled(inv));
        return;
    }
    zp::Field F{p};
    size_t mid = (lo + hi) / 2;
    zp::Poly A{1}, B{1};
    for (size_t i = lo; i < mid; ++i) A = zp::mul(F, A, facs[i]);
    for (size_t i = mid; i < hi; ++i) B = zp::mul(F, B, facs[i]);
    zp::Poly Lp{static_cast<zp::u64>(mpz_fdiv_ui(L.get_mpz_t(), p))};
    zp::Poly gA = zp::mul(F, A, Lp);
    zp::Poly s, t;
    zp::xgcd(F, gA, B, &s, &t);
    Integer m = p;
    PolyModM g(m, lift(gA)), h(m, lift(B)), S(m, lift(s)), T(m, lift(t));
    while (m < M) {
        Integer m2 = m * m;
        hensel_step(f, g, h, S, T, m2);
        m = m2;
    }
    // g carries the leading coefficient; make it monic for the subtree
    Integer inv;
    mpz_invert(inv.get_mpz_t(), L.get_mpz_t(), M.get_mpz_t());
    PolyModM gm = g.scaled(inv);
    lift_tree(gm.coeffs(), facs, lo, mid, p, M, out);
    lift_tree(h.coeffs(), facs, mid, hi, p, M, out);
}

Integer coefficient_bound(const ZPoly& f, int d) {
    Integer s = 0;
    for (const auto& c : f) s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    r += 1;
    Integer two_d;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, d);
    return 2 * abs(f.back()) * two_d * r + 1;
}

struct PrimeChoice {
    std::uint64_t p = 0;
    std::vector<zp::Poly> facs;
};

// Squarefree primitive f of degree >= 2 with f(0) != 0.  Returns the
// irreducible factors of degree <= max_degree (all of them when
// max_degree >= deg f).
std::vector<ZPoly> zassenhaus(ZPoly f, int max_degree) {
    const int n = zdeg(f);
    const bool full = max_degree >= n;
    std::mt19937_64 rng(0x5eed);
    auto low_count = [&](const std::vector<zp::Poly>& fs) {
        int c = 0;
        for (auto& q : fs)
            if (zp::deg(q) <= max_degree) ++c;
        return c;
    };
    PrimeChoice best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 5; p += 2) {
        if (!is_prime_small(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        zp::Field F{p};
        zp::Poly fp = reduce(f, p);
        if (!zp::is_squarefree(F, fp)) continue;
        ++tried;
        auto facs = zp::factor_squarefree(F, fp, rng);
        if (facs.size() == 1) return full ? std::vector<ZPoly>{f} : std::vector<ZPoly>{};
        if (low_count(facs) == 0) return full ? std::vector<ZPoly>{f} : std::vector<ZPoly>{};
        bool better = best.p == 0;
        if (!better) {
            int a = low_count(facs), b = low_count(best.facs);
            better = full ? facs.size() < best.facs.size() : (a < b || (a == b && facs.size() < best.facs.size()));
        }
        if (better) {
            best.p = p;
            best.facs = std::move(facs);
        }
    }

    const std::uint64_t p = best.p;
    Integer bound = coefficient_bound(f, std::min(n, max_degree));
    Integer M = p;
    while (M < bound) M = M * M;
    std::vector<PolyModM> lifted;
    lift_tree(f, best.facs, 0, best.facs.size(), p, M, lifted);

    std::vector<ZPoly> found;
    std::vector<size_t> active(lifted.size());
    std::iota(active.begin(), active.end(), 0);
    ZPoly cur = f;
    size_t s = 1;
    for (;;) {
        size_t r = active.size();
        if (full ? 2 * s > r : (s > r || static_cast<int>(s) > max_degree)) break;
        bool hit = false;
        std::vector<size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            int dsum = 0;
            for (size_t i : idx) dsum += lifted[active[i]].degree();
            if (dsum <= max_degree) {
                const Integer& L = cur.back();
                // cheap constant-term filter before the full product
                Integer c0 = L;
                for (size_t i : idx) {
                    c0 *= lifted[active[i]].coeffs().empty() ? Integer(0) : lifted[active[i]].coeffs()[0];
                    mpz_mod(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
                }
                if (c0 > M / 2) c0 -= M;
                Integer target = L * cur[0];
                bool ok = (c0 != 0) && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t());
                if (ok) {
                    PolyModM prod(M, ZPoly{L});
                    for (size_t i : idx) prod = prod * lifted[active[i]];
                    ZPoly g = zprimitive(prod.symmetric());
                    ZPoly q;
                    if (zdivides(cur, g, &q)) {
                        found.push_back(g);
                        cur = zprimitive(q);
                        std::vector<size_t> rest;
                        for (size_t k = 0; k < active.size(); ++k)
                            if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(active[k]);
                        active = std::move(rest);
                        hit = true;
                        break;
                    }
                }
            }
            // next combination
            size_t k = s;
            while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    // in the truncated search every low-degree factor was reached by some subset
    if (full && zdeg(cur) > 0) found.push_back(cur);
    return found;
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f) {
    std::vector<std::pair<PolyQ, int>> out;
    PolyQ a = f.monic();
    PolyQ b = a.derivative();
    PolyQ c = gcd(a, b);
    PolyQ w = a / c;
    PolyQ y = b / c;
    PolyQ z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        PolyQ g = gcd(w, z);
        if (g.degree() > 0) out.push_back({g, i});
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

bool quick_squarefree(const ZPoly& f) {
    int tried = 0;
    for (std::uint64_t p = 101; tried < 8; p += 2) {
        if (!is_prime_small(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        ++tried;
        if (zp::is_squarefree(zp::Field{p}, reduce(f, p))) return true;
    }
    return false;
}

PolyQ to_monic_q(const ZPoly& g) { return from_integer_coeffs(g).monic(); }

bool factor_less(const QFactor& a, const QFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    const auto& x = a.poly.coeffs();
    const auto& y = b.poly.coeffs();
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return a.multiplicity < b.multiplicity;
}

std::vector<QFactor> factor_impl(const PolyQ& p, int max_degree) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
    std::vector<QFactor> out;
    if (p.degree() == 0) return out;
    std::vector<std::pair<PolyQ, int>> parts;
    ZPoly F = primitive_part(p);
    if (quick_squarefree(F))
        parts.push_back({p.monic(), 1});
    else
        parts = squarefree_decomposition(p);
    for (auto& [part, mult] : parts) {
        ZPoly g = primitive_part(part);
        // peel off x
        int xpow = 0;
        while (g.size() > 1 && g[0] == 0) {
            g.erase(g.begin());
            ++xpow;
        }
        if (xpow) out.push_back({PolyQ::x(), mult});
        if (zdeg(g) <= 0) continue;
        if (zdeg(g) == 1) {
            if (max_degree >= 1) out.push_back({to_monic_q(g), mult});
            continue;
        }
        for (auto& h : zassenhaus(g, max_degree)) out.push_back({to_monic_q(h), mult});
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

}  // namespace

std::vector<QFactor> factor_over_Q(const PolyQ& p) { return factor_impl(p, std::max(p.degree(), 1)); }

std::vector<QFactor> factor_over_Q_upto(const PolyQ& p, int max_degree) { return factor_impl(p, max_degree); }

std::vector<Rational> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> out;
    for (const auto& f : factor_impl(p, 1))
        if (f.poly.degree() == 1) out.push_back(-f.poly.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace itg
