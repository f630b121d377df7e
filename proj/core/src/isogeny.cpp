#include "itg/isogeny.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <stdexcept>

#include "data.hpp"

namespace itg {

namespace {

long legendre(const Integer& a, long p) {
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    return mpz_legendre(r.get_mpz_t(), Integer(p).get_mpz_t());
}

// The Frobenius polynomial x^2 - a_p x + p must split mod ell at every good
// p != ell when there is a rational ell-isogeny.
bool frobenius_allows(const ShortModel& M, int ell) {
    for (long p : good_primes(M, 30)) {
        if (p == ell) continue;
        long a = trace_of_frobenius(M, p);
        Integer disc = Integer(a) * a - 4 * Integer(p);
        if (legendre(disc, ell) == -1) return false;
    }
    return true;
}

// Roots of K closed under x -> x(2P) = phi2(x) / F(x) on y^2 = x^3 + Ax + B.
bool closed_under_doubling(const PolyQ& K, const Rational& A, const Rational& B) {
    const PolyQ phi = PolyQ({A * A, -8 * B, -2 * A, Rational(0), Rational(1)}) % K;
    const PolyQ F = PolyQ({4 * B, 4 * A, Rational(0), Rational(4)}) % K;
    const int d = K.degree();
    PolyQ H = PolyQ::constant(K.coeff(d));
    PolyQ Fm = PolyQ::constant(1);
    for (int m = 1; m <= d; ++m) {
        Fm = (Fm * F) % K;
        H = (H * phi + Fm * K.coeff(d - m)) % K;
    }
    return H.is_zero();
}

std::vector<PolyQ> degree_d_products(const std::vector<QFactor>& facs, int d) {
    std::vector<PolyQ> out;
    const std::size_t n = facs.size();
    if (n > 20) throw std::runtime_error("rational_kernels: too many small factors to combine");
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        int deg = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) deg += facs[i].poly.degree();
        if (deg != d) continue;
        PolyQ K = PolyQ::constant(1);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) K *= facs[i].poly;
        out.push_back(K);
    }
    return out;
}

}  // namespace

long trace_of_frobenius(const ShortModel& M, long p) { return p + 1 - count_points(M, p); }

std::vector<KernelPoly> rational_kernels(const Curve& E, int ell) {
    if (ell != 2 && ell != 3 && ell != 5 && ell != 7 && ell != 13)
        throw std::invalid_argument("rational_kernels: unsupported degree " + std::to_string(ell));
    const ShortModel M = minimal_short_model(E);
    const Curve S = short_curve(M.A, M.B);
    std::vector<KernelPoly> out;
    if (ell == 2) {
        for (const auto& r : rational_roots(PolyQ({S.a6, S.a4, Rational(0), Rational(1)})))
            out.push_back({S, 2, PolyQ({-r, Rational(1)})});
        return out;
    }
    if (!frobenius_allows(M, ell)) return out;
    const int d = (ell - 1) / 2;
    auto facs = factor_over_Q_upto(division_polynomial(S, ell), d);
    for (auto& K : degree_d_products(facs, d))
        if (closed_under_doubling(K, S.a4, S.a6)) out.push_back({S, ell, K});
    return out;
}

Curve velu(const Curve& E, const KernelPoly& K) {
    if (!is_isomorphic_over_Q(E, K.base)) throw std::invalid_argument("velu: kernel belongs to another curve");
    const Rational A = K.base.a4, B = K.base.a6;
    Rational t, w;
    if (K.degree == 2) {
        Rational x0 = -K.poly.coeff(0);
        t = 3 * x0 * x0 + A;
        w = x0 * t;
    } else {
        const int d = K.poly.degree();
        if (K.poly.leading() != 1 || d != (K.degree - 1) / 2)
            throw std::invalid_argument("velu: kernel polynomial has the wrong shape");
        if (!closed_under_doubling(K.poly, A, B)) throw std::domain_error("velu: kernel is not a cyclic subgroup");
        Rational e1 = -K.poly.coeff(d - 1);
        Rational e2 = d >= 2 ? K.poly.coeff(d - 2) : Rational(0);
        Rational e3 = d >= 3 ? -K.poly.coeff(d - 3) : Rational(0);
        Rational p1 = e1;
        Rational p2 = e1 * e1 - 2 * e2;
        Rational p3 = e1 * e1 * e1 - 3 * e1 * e2 + 3 * e3;
        t = 6 * p2 + 2 * A * d;
        w = 10 * p3 + 6 * A * p1 + 4 * B * d;
    }
    return short_form(short_curve(A - 5 * t, B - 7 * w));
}

const std::vector<SporadicRecord>& sporadic_table() {
    static const std::vector<SporadicRecord> table = [] {
        std::vector<SporadicRecord> out;
        auto doc = nlohmann::json::parse(data::embedded().at("sporadic_j.json"));
        for (const auto& r : doc.at("records"))
            out.push_back({r.at("ell").get<int>(), parse_rational(r.at("j").get<std::string>()),
                           parse_rational(r.at("partner_j").get<std::string>())});
        return out;
    }();
    return table;
}

namespace {

// The twist of C0 with the same Frobenius traces as E.
Curve matching_twist(const Curve& E, const Curve& C0, bool avoid_isomorphic) {
    const ShortModel M = minimal_short_model(E);
    const ShortModel M0 = minimal_short_model(C0);
    std::vector<Integer> primes{-1, 2, 3};
    for (const auto& m : {M, M0}) {
        Integer disc = 4 * m.A * m.A * m.A + 27 * m.B * m.B;
        for (auto& [q, e] : factor_integer(disc)) {
            (void)e;
            if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
        }
    }
    std::vector<long> ps;
    for (long p : good_primes(M, 40))
        if (legendre(4 * M0.A * M0.A * M0.A + 27 * M0.B * M0.B, p) != 0) ps.push_back(p);
    std::vector<long> ae, a0;
    for (long p : ps) {
        ae.push_back(trace_of_frobenius(M, p));
        a0.push_back(trace_of_frobenius(M0, p));
    }
    for (unsigned long mask = 0; mask < (1UL << primes.size()); ++mask) {
        Integer d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) d *= primes[i];
        bool ok = true;
        for (std::size_t k = 0; k < ps.size() && ok; ++k)
            if (ae[k] != legendre(d, ps[k]) * a0[k]) ok = false;
        if (!ok) continue;
        Curve C = quadratic_twist(C0, d);
        if (avoid_isomorphic && is_isomorphic_over_Q(C, E)) continue;
        return C;
    }
    throw std::logic_error("no twist of the partner curve matches the Frobenius traces");
}

}  // namespace

std::vector<SporadicEdge> sporadic_isogenies(const Curve& E) {
    std::vector<SporadicEdge> out;
    for (const auto& r : sporadic_table()) {
        if (r.j != E.j) continue;
        Curve C = matching_twist(E, curve_from_j(r.partner_j), r.partner_j == r.j);
        out.push_back({r.ell, r.partner_j, C});
    }
    return out;
}

LabeledGraph IsogenyClass::graph() const {
    LabeledGraph g;
    for (const auto& t : torsion) g.torsion.push_back(t.shape);
    g.edges = edges;
    g.normalize();
    return g;
}

IsogenyClass isogeny_class(const Curve& E) {
    IsogenyClass cls;
    cls.curves.push_back(E);
    std::deque<int> queue{0};
    auto index_of = [&](const Curve& C) {
        for (int k = 0; k < cls.size(); ++k)
            if (is_isomorphic_over_Q(C, cls.curves[k])) return k;
        if (cls.size() >= 8) throw std::logic_error("isogeny class exceeds eight curves");
        cls.curves.push_back(C);
        queue.push_back(cls.size() - 1);
        return cls.size() - 1;
    };
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        const Curve cur = cls.curves[i];
        for (int ell : {2, 3, 5, 7, 13})
            for (const auto& K : rational_kernels(cur, ell)) {
                int k = index_of(velu(cur, K));
                if (k != i) cls.edges.push_back({std::min(i, k), std::max(i, k), ell});
            }
        for (const auto& s : sporadic_isogenies(cur)) {
            int k = index_of(s.codomain);
            if (k != i) cls.edges.push_back({std::min(i, k), std::max(i, k), s.ell});
        }
    }
    std::sort(cls.edges.begin(), cls.edges.end());
    cls.edges.erase(std::unique(cls.edges.begin(), cls.edges.end()), cls.edges.end());
    for (const auto& C : cls.curves) cls.torsion.push_back(torsion_subgroup(C));
    return cls;
}

}  // namespace itg
