#include <algorithm>
#include <numeric>

#include "curve_internal.hpp"
#include "itg/curve.hpp"

namespace itg {

namespace {

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_pos(const Integer& a, long p) {
    Integer r = a % p;
    long v = r.get_si();
    return v < 0 ? v + p : v;
}

}  // namespace

long count_points(const ShortModel& M, long p) {
    const long A = mod_pos(M.A, p), B = mod_pos(M.B, p);
    std::vector<char> square(p, 0);
    for (long y = 0; y < p; ++y) square[y * y % p] = 1;
    long n = 1;  // point at infinity
    for (long x = 0; x < p; ++x) {
        long r = ((x * x % p) * x + A * x + B) % p;
        if (r == 0) {
            n += 1;
        } else if (square[r]) {
            n += 2;
        }
    }
    return n;
}

std::vector<long> good_primes(const ShortModel& M, int count, long start) {
    Integer d = 4 * M.A * M.A * M.A + 27 * M.B * M.B;
    std::vector<long> out;
    for (long p = std::max(start, 5L); static_cast<int>(out.size()) < count; ++p) {
        if (!is_prime_small(p)) continue;
        if (d % p == 0) continue;
        out.push_back(p);
    }
    return out;
}

RationalTorsion torsion_subgroup(const Curve& E) {
    const ShortScaling sc = short_scaling(E);
    const Curve S = short_curve(sc.model.A, sc.model.B);
    long bound = 0;
    for (long p : good_primes(sc.model, 5)) bound = std::gcd(bound, count_points(sc.model, p));

    struct Part {
        int q;
        TorsionShape shape;
        Point cyclic;     // point of maximal order
        Point extra;      // second generator when the part is not cyclic
    };
    std::vector<Part> parts;
    for (int q : {2, 3, 5, 7}) {
        int v = 0;
        for (long b = bound; b % q == 0; b /= q) ++v;
        if (!v) continue;
        int cap = q == 2 ? 3 : q == 3 ? 2 : 1;
        int n = 1;
        for (int i = 0; i < std::min(v, cap); ++i) n *= q;
        std::vector<Point> pts;
        for (const auto& x : rational_roots(division_polynomial(S, n))) {
            Rational r = x * x * x + S.a4 * x + S.a6;
            Rational y;
            if (r == 0) {
                pts.push_back(Point::affine(x, 0));
            } else if (rational_root_exact(r, 2, &y)) {
                pts.push_back(Point::affine(x, y));
                pts.push_back(Point::affine(x, -y));
            }
        }
        if (pts.empty()) continue;
        Part part{q, {}, Point::zero(), Point::zero()};
        int exponent = 1;
        for (const auto& P : pts) {
            int o = point_order(S, P, n);
            if (o > exponent) {
                exponent = o;
                part.cyclic = P;
            }
        }
        part.shape = TorsionShape::from_order_exponent(static_cast<long>(pts.size()) + 1, exponent);
        if (part.shape.a > 1) {
            Point half = mul(S, exponent / 2, part.cyclic);
            for (const auto& P : pts)
                if (point_order(S, P, 2) == 2 && !(P == half)) {
                    part.extra = P;
                    break;
                }
        }
        parts.push_back(part);
    }

    RationalTorsion out;
    Point gen = Point::zero();
    Point extra = Point::zero();
    for (const auto& p : parts) {
        out.shape = out.shape * p.shape;
        gen = add(S, gen, p.cyclic);
        if (!p.extra.infinity) extra = p.extra;
    }
    if (!gen.infinity) out.generators.push_back(from_short(E, sc, gen));
    if (!extra.infinity) out.generators.push_back(from_short(E, sc, extra));
    return out;
}

}  // namespace itg
