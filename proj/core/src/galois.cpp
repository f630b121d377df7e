#include "itg/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "itg/classify.hpp"

namespace itg {

namespace {

int prime_of_power(int n) {
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        int m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0;
    }
    return 0;
}

int valuation(int n, int p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> primes_of(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    return out;
}

// bitmap of the elements of C over codes x * N + y
std::vector<char> membership(const CyclicSubmodule& C) {
    std::vector<char> in(static_cast<std::size_t>(C.level) * C.level, 0);
    for (int e : C.elements()) in[e] = 1;
    return in;
}

int code_of(int N, int x, int y) { return ((x % N + N) % N) * N + ((y % N + N) % N); }

}  // namespace

std::vector<int> CyclicSubmodule::elements() const {
    std::vector<int> out;
    for (int k = 0; k < order; ++k) out.push_back(code_of(level, k * generator[0], k * generator[1]));
    std::sort(out.begin(), out.end());
    return out;
}

bool CyclicSubmodule::contains(int x, int y) const {
    int c = code_of(level, x, y);
    for (int k = 0; k < order; ++k)
        if (code_of(level, k * generator[0], k * generator[1]) == c) return true;
    return false;
}

bool CyclicSubmodule::contains(const CyclicSubmodule& o) const {
    return level == o.level && contains(o.generator[0], o.generator[1]);
}

InadequateLevel::InadequateLevel(int p, int h, int n)
    : std::runtime_error("level " + std::to_string(h) + " is inadequate at prime " + std::to_string(p) +
                         "; lift to level " + std::to_string(n)),
      prime(p),
      have(h),
      need(n) {}

int mazur_exponent(int p) {
    switch (p) {
        case 2: return 3;
        case 3: return 2;
        case 5:
        case 7: return 1;
        default: return 0;
    }
}

int adequate_level(int p, int h) { return ipow(p, valuation(h, p) + mazur_exponent(p)); }

CyclicSubmodule make_submodule(int N, int x, int y) {
    x = ((x % N) + N) % N;
    y = ((y % N) + N) % N;
    int g = std::gcd(std::gcd(x, y), N);
    int h = N / g;
    CyclicSubmodule C{N, {x, y}, h};
    int best = code_of(N, x, y);
    for (int k = 1; k < h; ++k) {
        if (std::gcd(k, h) != 1) continue;
        int c = code_of(N, k * x, k * y);
        if (c < best) best = c;
    }
    C.generator = {best / N, best % N};
    return C;
}

bool is_stable(const GroupModN& G, const CyclicSubmodule& C) {
    if (C.level != G.level()) return false;
    for (const auto& g : G.generators()) {
        auto v = g.apply(C.generator[0], C.generator[1]);
        if (!C.contains(v[0], v[1])) return false;
    }
    return true;
}

std::vector<CyclicSubmodule> stable_cyclic_submodules(const GroupModN& G) {
    const int N = G.level();
    std::set<std::pair<int, int>> seen;  // (order, canonical code)
    std::vector<CyclicSubmodule> out;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            CyclicSubmodule C = make_submodule(N, x, y);
            if (!seen.insert({C.order, C.generator[0] * N + C.generator[1]}).second) continue;
            if (is_stable(G, C)) out.push_back(C);
        }
    std::sort(out.begin(), out.end(), [N](const CyclicSubmodule& a, const CyclicSubmodule& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.generator[0] * N + a.generator[1] < b.generator[0] * N + b.generator[1];
    });
    return out;
}

namespace {

// {v : g v - v in C} / C without adequacy or admissibility checks
TorsionShape raw_quotient(const GroupModN& G, const CyclicSubmodule& C) {
    const int N = G.level();
    auto in = membership(C);
    std::vector<std::array<int, 2>> W;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            bool ok = true;
            for (const auto& g : G.generators()) {
                auto v = g.apply(x, y);
                if (!in[code_of(N, v[0] - x, v[1] - y)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) W.push_back({x, y});
        }
    long order = static_cast<long>(W.size()) / C.order;
    long exponent = 1;
    for (auto [x, y] : W) {
        long k = 1;
        while (!in[code_of(N, k * x, k * y)]) ++k;
        exponent = std::lcm(exponent, k);
    }
    return TorsionShape::from_order_exponent(order, exponent);
}

}  // namespace

TorsionShape fixed_points(const GroupModN& G) { return raw_quotient(G, make_submodule(G.level(), 0, 0)); }

TorsionShape quotient_rational_torsion(const GroupModN& G, const CyclicSubmodule& C) {
    if (C.level != G.level()) throw std::invalid_argument("quotient_rational_torsion: level mismatch");
    if (!is_stable(G, C)) throw std::invalid_argument("quotient_rational_torsion: submodule is not stable");
    const int N = G.level();
    for (int p : primes_of(N)) {
        int need = adequate_level(p, C.order);
        if (N % need != 0) throw InadequateLevel(p, ipow(p, valuation(N, p)), need);
    }
    TorsionShape t = raw_quotient(G, C);
    if (!t.mazur_admissible())
        throw std::domain_error("quotient torsion " + t.to_string() + " is not one of Mazur's groups");
    return t;
}

namespace {

int required_level(int p, const GroupModN& G) {
    int need = adequate_level(p, 1);
    for (const auto& C : stable_cyclic_submodules(G)) need = std::max(need, adequate_level(p, C.order));
    return need;
}

int kenku_cap(int p) {
    switch (p) {
        case 2: return 8;
        case 3: return 4;
        case 5: return 3;
        default: return 2;
    }
}

}  // namespace

PredictedGraph predicted_graph(const std::map<int, GroupModN>& images) {
    struct PrimeData {
        int p;
        std::vector<CyclicSubmodule> subs;
        std::vector<TorsionShape> torsion;
    };
    std::vector<PrimeData> data;
    for (const auto& [p, G] : images) {
        if (prime_of_power(G.level()) != p)
            throw std::invalid_argument("predicted_graph: image at prime " + std::to_string(p) +
                                        " must have level a power of it");
        int need = required_level(p, G);
        if (G.level() < need) throw InadequateLevel(p, G.level(), need);
        PrimeData d{p, stable_cyclic_submodules(G), {}};
        for (const auto& C : d.subs) d.torsion.push_back(quotient_rational_torsion(G, C));
        if (static_cast<int>(d.subs.size()) > kenku_cap(p))
            throw std::domain_error("Kenku bound violated at p = " + std::to_string(p));
        data.push_back(std::move(d));
    }

    PredictedGraph out;
    std::vector<std::vector<int>> index{{}};
    for (const auto& d : data) {
        std::vector<std::vector<int>> next;
        for (const auto& t : index)
            for (std::size_t i = 0; i < d.subs.size(); ++i) {
                auto u = t;
                u.push_back(static_cast<int>(i));
                next.push_back(u);
            }
        index = std::move(next);
    }
    if (index.size() > 8) throw std::domain_error("Kenku bound violated: more than 8 vertices");

    for (const auto& t : index) {
        PredictedVertex v;
        for (std::size_t k = 0; k < data.size(); ++k) {
            v.parts.emplace(data[k].p, data[k].subs[t[k]]);
            v.torsion = v.torsion * data[k].torsion[t[k]];
        }
        if (!v.torsion.mazur_admissible())
            throw std::domain_error("predicted torsion " + v.torsion.to_string() + " is not one of Mazur's groups");
        out.vertices.push_back(v);
        out.graph.torsion.push_back(v.torsion);
    }
    for (std::size_t u = 0; u < index.size(); ++u)
        for (std::size_t w = u + 1; w < index.size(); ++w) {
            int diff = -1;
            bool single = true;
            for (std::size_t k = 0; k < data.size(); ++k) {
                if (index[u][k] == index[w][k]) continue;
                if (diff >= 0) single = false;
                diff = static_cast<int>(k);
            }
            if (!single || diff < 0) continue;
            const auto& A = data[diff].subs[index[u][diff]];
            const auto& B = data[diff].subs[index[w][diff]];
            const int p = data[diff].p;
            bool adjacent = (A.order * p == B.order && B.contains(A)) || (B.order * p == A.order && A.contains(B));
            if (adjacent) out.graph.edges.push_back({static_cast<int>(u), static_cast<int>(w), p});
        }
    out.graph.normalize();

    if (!kenku_audit(out.graph).ok()) throw std::domain_error("Kenku conditions violated by the predicted graph");
    return out;
}

std::map<int, GroupModN> lift_to_adequate(std::map<int, GroupModN> images) {
    for (auto& [p, G] : images) {
        for (;;) {
            int need = required_level(p, G);
            if (G.level() >= need) break;
            G = lift_full_preimage(G, need);
        }
    }
    return images;
}

}  // namespace itg
