#include "itg/gl2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace itg {

namespace {

int modn(long x, int n) {
    long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int inverse_mod(int a, int n) {
    long t = 0, nt = 1, r = n, nr = modn(a, n);
    while (nr) {
        long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("not invertible mod n");
    return modn(t, n);
}

int primitive_root(int p) {
    auto ps = prime_divisors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int q : ps) {
            long r = 1;
            for (int i = 0; i < (p - 1) / q; ++i) r = r * g % p;
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

}  // namespace

// ------------------------------------------------------------- MatModN

MatModN::MatModN(int n, long a_, long b_, long c_, long d_) : level(n) {
    if (n < 2) throw std::invalid_argument("MatModN: level must be >= 2");
    a = modn(a_, n);
    b = modn(b_, n);
    c = modn(c_, n);
    d = modn(d_, n);
}

int MatModN::det() const { return modn(static_cast<long>(a) * d - static_cast<long>(b) * c, level); }

bool MatModN::invertible() const { return gcd_int(det(), level) == 1; }

MatModN MatModN::operator*(const MatModN& o) const {
    if (level != o.level) throw std::invalid_argument("MatModN: level mismatch");
    long A = a, B = b, C = c, D = d;
    return MatModN(level, A * o.a + B * o.c, A * o.b + B * o.d, C * o.a + D * o.c, C * o.b + D * o.d);
}

MatModN MatModN::inverse() const {
    int di = inverse_mod(det(), level);
    return MatModN(level, static_cast<long>(d) * di, -static_cast<long>(b) * di, -static_cast<long>(c) * di,
                   static_cast<long>(a) * di);
}

std::uint64_t MatModN::code() const {
    std::uint64_t n = level;
    return ((static_cast<std::uint64_t>(a) * n + b) * n + c) * n + d;
}

MatModN MatModN::from_code(int n, std::uint64_t code) {
    long d = code % n;
    code /= n;
    long c = code % n;
    code /= n;
    long b = code % n;
    code /= n;
    return MatModN(n, static_cast<long>(code), b, c, d);
}

std::array<int, 2> MatModN::apply(int x, int y) const {
    return {modn(static_cast<long>(a) * x + static_cast<long>(b) * y, level),
            modn(static_cast<long>(c) * x + static_cast<long>(d) * y, level)};
}

std::string MatModN::to_string() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) +
           "]]";
}

MatModN minus_id(int level) { return MatModN(level, -1, 0, 0, -1); }
MatModN identity(int level) { return MatModN(level, 1, 0, 0, 1); }

// ------------------------------------------------------------ GroupModN

struct GroupModN::Closure {
    std::once_flag once;
    std::vector<std::uint64_t> codes;
};

GroupModN::GroupModN(int level, std::vector<MatModN> gens)
    : level_(level), gens_(std::move(gens)), closure_(std::make_shared<Closure>()) {}

const std::vector<std::uint64_t>& GroupModN::element_codes() const {
    std::call_once(closure_->once, [this] {
        std::unordered_set<std::uint64_t> seen;
        std::vector<MatModN> frontier{identity(level_)};
        seen.insert(frontier[0].code());
        std::vector<std::uint64_t> all{frontier[0].code()};
        while (!frontier.empty()) {
            std::vector<MatModN> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens_) {
                    MatModN y = x * g;
                    if (seen.insert(y.code()).second) {
                        all.push_back(y.code());
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(all.begin(), all.end());
        closure_->codes = std::move(all);
    });
    return closure_->codes;
}

std::vector<MatModN> GroupModN::elements() const {
    std::vector<MatModN> out;
    for (auto c : element_codes()) out.push_back(MatModN::from_code(level_, c));
    return out;
}

bool GroupModN::contains(const MatModN& m) const {
    if (m.level != level_) return false;
    const auto& c = element_codes();
    return std::binary_search(c.begin(), c.end(), m.code());
}

bool GroupModN::same_as(const GroupModN& o) const {
    return level_ == o.level_ && element_codes() == o.element_codes();
}

GroupModN generate(int level, const std::vector<MatModN>& gens) {
    if (level < 2) throw std::invalid_argument("generate: level must be >= 2");
    for (const auto& g : gens) {
        if (g.level != level) throw std::invalid_argument("generate: generator level mismatch");
        if (!g.invertible()) throw std::invalid_argument("generate: non-invertible generator " + g.to_string());
    }
    return GroupModN(level, gens);
}

GroupModN borel(int level) {
    std::vector<MatModN> gens{MatModN(level, 1, 1, 0, 1)};
    for (int d = 1; d < level; ++d)
        if (gcd_int(d, level) == 1 && d != 1) gens.push_back(MatModN(level, 1, 0, 0, d));
    return generate(level, gens);
}

GroupModN split_cartan(int p) {
    if (!is_prime_int(p)) throw std::invalid_argument("split_cartan: p must be prime");
    return generate(p, {MatModN(p, 1, 0, 0, primitive_root(p))});
}

std::uint64_t gl2_order(int n) {
    // N^4 * prod (1 - 1/p)(1 - 1/p^2)
    std::uint64_t r = static_cast<std::uint64_t>(n) * n * n * n;
    for (int p : prime_divisors(n)) r = r / p * (p - 1) / (static_cast<std::uint64_t>(p) * p) * (static_cast<std::uint64_t>(p) * p - 1);
    return r;
}

namespace {

std::vector<MatModN> all_gl2(int n) {
    std::vector<MatModN> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    MatModN m(n, a, b, c, d);
                    if (m.invertible()) out.push_back(m);
                }
    return out;
}

std::vector<MatModN> kernel_generators(int n, int m) {
    // generators of ker(GL2(Z/m) -> GL2(Z/n))
    std::vector<MatModN> out{MatModN(m, 1, n, 0, 1), MatModN(m, 1, 0, n, 1), MatModN(m, 1 + n, n, 0, 1),
                             MatModN(m, 1, 0, n, 1 + n)};
    for (long u = 1 + n; u < m; u += n) {
        if (gcd_int(static_cast<int>(u), m) == 1) {
            out.push_back(MatModN(m, u, 0, 0, 1));
            out.push_back(MatModN(m, 1, 0, 0, u));
        }
    }
    // drop non-invertible entries (only possible when m has new primes)
    std::vector<MatModN> ok;
    for (auto& g : out)
        if (g.invertible()) ok.push_back(g);
    return ok;
}

MatModN invertible_lift(const MatModN& g, int m) {
    int n = g.level;
    for (int i = 0; i < m / n; ++i)
        for (int j = 0; j < m / n; ++j)
            for (int k = 0; k < m / n; ++k)
                for (int l = 0; l < m / n; ++l) {
                    MatModN h(m, g.a + i * n, g.b + j * n, g.c + k * n, g.d + l * n);
                    if (h.invertible()) return h;
                }
    throw std::domain_error("no invertible lift");
}

}  // namespace

GroupModN full_gl2(int level) {
    std::vector<MatModN> gens{MatModN(level, 1, 1, 0, 1), MatModN(level, 1, 0, 1, 1)};
    for (int d = 2; d < level; ++d)
        if (gcd_int(d, level) == 1) gens.push_back(MatModN(level, 1, 0, 0, d));
    return generate(level, gens);
}

GroupPredicates predicates(const GroupModN& g) {
    const int n = g.level();
    GroupPredicates r{};
    r.contains_minus_id = g.contains(minus_id(n));
    std::set<int> dets;
    for (const auto& m : g.elements()) dets.insert(m.det());
    int units = 0;
    for (int u = 1; u < n; ++u)
        if (gcd_int(u, n) == 1) ++units;
    if (n == 2) units = 1;
    r.full_determinant = static_cast<int>(dets.size()) == units;
    // conjugacy classes of the two complex-conjugation shapes
    std::vector<MatModN> cc{MatModN(n, 1, 1, 0, -1), MatModN(n, 1, 0, 0, -1)};
    std::unordered_set<std::uint64_t> cls;
    for (const auto& M : all_gl2(n)) {
        MatModN Mi = M.inverse();
        for (const auto& c : cc) cls.insert((M * c * Mi).code());
    }
    r.has_cc_representative = false;
    for (auto code : g.element_codes())
        if (cls.count(code)) {
            r.has_cc_representative = true;
            break;
        }
    return r;
}

namespace {

std::vector<GroupModN> index_two_by_squares(const GroupModN& g) {
    const int n = g.level();
    auto elems = g.elements();
    std::vector<MatModN> squares;
    std::set<std::uint64_t> sq;
    for (const auto& x : elems)
        if (sq.insert((x * x).code()).second) squares.push_back(x * x);
    // squares generate a normal subgroup S with G/S elementary abelian
    GroupModN S = generate(n, squares.empty() ? std::vector<MatModN>{identity(n)} : squares);
    std::vector<MatModN> basis;
    std::vector<MatModN> span_gens = squares;
    std::size_t cur = S.order();
    GroupModN span = S;
    for (const auto& x : elems) {
        if (span.contains(x)) continue;
        span_gens.push_back(x);
        basis.push_back(x);
        span = generate(n, span_gens);
        cur = span.order();
        if (cur == g.order()) break;
    }
    const std::size_t r = basis.size();
    // coordinates of each element relative to the basis
    std::map<std::uint64_t, unsigned> coord;
    for (const auto& x : elems) {
        for (unsigned v = 0; v < (1u << r); ++v) {
            MatModN y = x;
            for (std::size_t i = 0; i < r; ++i)
                if (v >> i & 1) y = y * basis[i];
            if (S.contains(y)) {
                coord[x.code()] = v;
                break;
            }
        }
    }
    std::vector<GroupModN> out;
    for (unsigned phi = 1; phi < (1u << r); ++phi) {
        std::vector<MatModN> gens;
        for (const auto& x : elems)
            if (__builtin_popcount(coord[x.code()] & phi) % 2 == 0) gens.push_back(x);
        out.push_back(generate(n, gens));
    }
    return out;
}

std::vector<GroupModN> cyclic_subgroups(const GroupModN& g) {
    std::vector<GroupModN> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& x : g.elements()) {
        GroupModN c = generate(g.level(), {x});
        if (seen.insert(c.element_codes()).second) out.push_back(c);
    }
    return out;
}

std::vector<GroupModN> subgroups_of_order(const GroupModN& g, std::size_t target) {
    // every subgroup is a join of cyclic subgroups; only joins of order
    // dividing the target can lie inside a subgroup of that order
    auto cyc = cyclic_subgroups(g);
    std::vector<GroupModN> level;
    std::set<std::vector<std::uint64_t>> seen;
    for (auto& c : cyc)
        if (target % c.order() == 0 && seen.insert(c.element_codes()).second) level.push_back(c);
    std::vector<GroupModN> all = level;
    while (!level.empty()) {
        std::vector<GroupModN> next;
        for (const auto& h : level) {
            for (const auto& c : cyc) {
                if (target % c.order() != 0) continue;
                if (h.contains(c.generators()[0])) continue;
                std::vector<MatModN> gens = h.generators();
                gens.push_back(c.generators()[0]);
                GroupModN j = generate(g.level(), gens);
                if (target % j.order() != 0) continue;
                if (seen.insert(j.element_codes()).second) {
                    next.push_back(j);
                    all.push_back(j);
                }
            }
        }
        level = std::move(next);
    }
    std::vector<GroupModN> out;
    for (auto& h : all)
        if (h.order() == target) out.push_back(h);
    return out;
}

}  // namespace

std::vector<GroupModN> subgroups_of_index(const GroupModN& g, int k) {
    if (k <= 0 || g.order() % k != 0) throw std::invalid_argument("subgroups_of_index: k must divide |G|");
    if (k == 1) return {g};
    if (k == 2) return index_two_by_squares(g);
    return subgroups_of_order(g, g.order() / k);
}

bool is_conjugate(const GroupModN& g1, const GroupModN& g2) {
    if (g1.level() != g2.level()) throw std::invalid_argument("is_conjugate: levels differ");
    if (g1.order() != g2.order()) return false;
    const int n = g1.level();
    const auto& gens = g1.generators();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    MatModN M(n, a, b, c, d);
                    if (!M.invertible()) continue;
                    MatModN Mi = M.inverse();
                    bool ok = true;
                    for (const auto& x : gens) {
                        if (!g2.contains(M * x * Mi)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) return true;
                }
    return false;
}

GroupModN twist_closure(const GroupModN& g) {
    if (g.contains(minus_id(g.level()))) return g;
    auto gens = g.generators();
    gens.push_back(minus_id(g.level()));
    return generate(g.level(), gens);
}

GroupModN transpose_group(const GroupModN& g) {
    std::vector<MatModN> gens;
    for (const auto& x : g.generators()) gens.push_back(x.transpose());
    return generate(g.level(), gens);
}

GroupModN reduce_level(const GroupModN& g, int n) {
    if (n < 2 || g.level() % n != 0) throw std::invalid_argument("reduce_level: target level must divide level");
    std::vector<MatModN> gens;
    for (const auto& x : g.generators()) gens.push_back(x.reduce(n));
    return generate(n, gens);
}

GroupModN lift_full_preimage(const GroupModN& g, int m) {
    const int n = g.level();
    if (m % n != 0) throw std::invalid_argument("lift_full_preimage: level must divide target");
    if (m == n) return g;
    std::vector<MatModN> gens;
    for (const auto& x : g.generators()) gens.push_back(invertible_lift(x, m));
    for (const auto& k : kernel_generators(n, m)) gens.push_back(k);
    return generate(m, gens);
}

std::vector<GroupModN> two_generated_subgroups(const GroupModN& g) {
    auto elems = g.elements();
    std::vector<GroupModN> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        GroupModN c = generate(g.level(), {elems[i]});
        if (seen.insert(c.element_codes()).second) out.push_back(c);
    }
    const std::size_t ncyc = out.size();
    for (std::size_t i = 0; i < ncyc; ++i)
        for (std::size_t j = i + 1; j < ncyc; ++j) {
            GroupModN h = generate(g.level(), {out[i].generators()[0], out[j].generators()[0]});
            if (seen.insert(h.element_codes()).second) out.push_back(h);
        }
    return out;
}

namespace {

bool conjugate_within(const GroupModN& ambient, const GroupModN& a, const GroupModN& b) {
    if (a.order() != b.order()) return false;
    for (const auto& M : ambient.elements()) {
        MatModN Mi = M.inverse();
        bool ok = true;
        for (const auto& x : a.generators())
            if (!b.contains(M * x * Mi)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool full_det(const GroupModN& h) { return predicates(h).full_determinant; }

}  // namespace

bool verify_borel_classification(int p) {
    if (p % 2 == 0 || !is_prime_int(p) || p > 13)
        throw std::invalid_argument("verify_borel_classification: p must be an odd prime <= 13");
    GroupModN B = borel(p);
    GroupModN D = split_cartan(p);
    std::vector<GroupModN> reps;
    for (auto& h : two_generated_subgroups(B)) {
        std::set<int> dets;
        for (const auto& x : h.elements()) dets.insert(x.det());
        if (static_cast<int>(dets.size()) != p - 1) continue;
        bool known = false;
        for (auto& r : reps)
            if (conjugate_within(B, h, r)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(h);
    }
    if (reps.size() != 2) return false;
    bool has_d = false, has_b = false;
    for (auto& r : reps) {
        if (conjugate_within(B, r, D)) has_d = true;
        if (r.same_as(B)) has_b = true;
    }
    return has_d && has_b;
}

bool verify_split_cartan(int p) {
    if (p != 3 && p != 5) throw std::invalid_argument("verify_split_cartan: p must be 3 or 5");
    GroupModN G = full_gl2(p);
    GroupModN D = split_cartan(p);
    int hits = 0;
    for (auto& h : two_generated_subgroups(G)) {
        if (!full_det(h)) continue;
        // nonzero fixed vector
        bool fixed = false;
        for (int x = 0; x < p && !fixed; ++x)
            for (int y = 0; y < p && !fixed; ++y) {
                if (!x && !y) continue;
                bool all = true;
                for (const auto& g : h.generators()) {
                    auto v = g.apply(x, y);
                    if (v[0] != x || v[1] != y) {
                        all = false;
                        break;
                    }
                }
                fixed = all;
            }
        if (!fixed) continue;
        // stable lines: representatives (1, y) and (0, 1)
        int lines = 0;
        std::vector<std::array<int, 2>> reps{{0, 1}};
        for (int y = 0; y < p; ++y) reps.push_back({1, y});
        for (auto [x, y] : reps) {
            bool stable = true;
            for (const auto& g : h.generators()) {
                auto v = g.apply(x, y);
                bool in = false;
                for (int k = 1; k < p; ++k)
                    if (v[0] == x * k % p && v[1] == y * k % p) in = true;
                if (!in) {
                    stable = false;
                    break;
                }
            }
            if (stable) ++lines;
        }
        if (lines < 2) continue;
        ++hits;
        if (!is_conjugate(h, D)) return false;
    }
    return hits > 0;
}

GroupModN named_group(const std::string& name) {
    auto M = [](int n, long a, long b, long c, long d) { return MatModN(n, a, b, c, d); };
    if (name == "H24e") return generate(4, {M(4, 3, 0, 0, 1), M(4, 1, 2, 2, 3), M(4, 3, 2, 2, 3)});
    if (name == "H24d") return generate(4, {M(4, 1, 0, 0, 3), M(4, 1, 2, 2, 3), M(4, 1, 2, 2, 1)});
    if (name == "H24") return twist_closure(named_group("H24e"));
    if (name == "H98e") return generate(8, {M(8, 3, 0, 0, 1), M(8, 5, 0, 0, 1), M(8, 1, 0, 2, 1), M(8, 1, 4, 0, 1)});
    if (name == "H98h") return generate(8, {M(8, 5, 0, 0, 1), M(8, 1, 0, 2, 1), M(8, 1, 0, 0, 7), M(8, 1, 4, 0, 1)});
    if (name == "H98o" || name == "H3")
        return generate(8, {M(8, 3, 0, 0, 1), M(8, 5, 0, 0, 1), M(8, 1, 0, 2, 1), M(8, 7, 4, 0, 7)});
    if (name == "H98") return twist_closure(named_group("H98e"));
    if (name == "H193n") return generate(8, {M(8, 3, 0, 0, 1), M(8, 5, 0, 0, 1), M(8, 1, 0, 2, 1)});
    if (name == "H194l") return generate(8, {M(8, 3, 0, 0, 1), M(8, 5, 0, 0, 1), M(8, 1, 0, 4, 1), M(8, 1, 0, 2, 5)});
    if (name == "H215c")
        return generate(16, {M(16, 3, 0, 0, 1), M(16, 7, 0, 0, 1), M(16, 1, 0, 2, 1), M(16, 1, 8, 0, 5)});
    if (name == "H215l")
        return generate(16, {M(16, 13, 0, 0, 15), M(16, 9, 0, 0, 15), M(16, 1, 0, 2, 1), M(16, 1, 8, 0, 5)});
    if (name == "H215k")
        return generate(16, {M(16, 13, 0, 0, 1), M(16, 1, 0, 2, 1), M(16, 1, 0, 0, 15), M(16, 15, 8, 0, 11)});
    if (name == "H215") return twist_closure(named_group("H215k"));
    throw std::invalid_argument("unknown group name: " + name);
}

std::vector<std::string> named_group_names() {
    return {"H24e", "H24d", "H24", "H98e", "H98h", "H98o", "H98", "H193n", "H194l", "H215c", "H215l", "H215k", "H215"};
}

}  // namespace itg
