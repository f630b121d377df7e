#include "itg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace itg {

bool TorsionShape::mazur_admissible() const {
    if (a == 1) return (b >= 1 && b <= 10) || b == 12;
    if (a == 2) return b == 2 || b == 4 || b == 6 || b == 8;
    return false;
}

std::string TorsionShape::to_string() const {
    if (a == 1) return "[" + std::to_string(b) + "]";
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::string TorsionShape::group_string() const {
    if (a == 1) return b == 1 ? "0" : "Z/" + std::to_string(b) + "Z";
    return "Z/" + std::to_string(a) + "Z x Z/" + std::to_string(b) + "Z";
}

TorsionShape TorsionShape::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.size() < 3 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("bad torsion shape: " + s);
    t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    try {
        if (comma == std::string::npos) return {1, std::stoi(t)};
        TorsionShape r{std::stoi(t.substr(0, comma)), std::stoi(t.substr(comma + 1))};
        if (r.a <= 0 || r.b % r.a != 0) throw std::invalid_argument("a must divide b");
        return r;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad torsion shape: " + s);
    }
}

TorsionShape TorsionShape::from_order_exponent(long order, long exponent) {
    if (exponent <= 0 || order % exponent != 0) throw std::invalid_argument("inconsistent order/exponent");
    return {static_cast<int>(order / exponent), static_cast<int>(exponent)};
}

TorsionShape TorsionShape::operator*(const TorsionShape& o) const {
    if (std::gcd(order(), o.order()) != 1) throw std::invalid_argument("TorsionShape product needs coprime orders");
    return {a * o.a, b * o.b};
}

TorsionShape TorsionShape::primary(int p) const {
    auto part = [p](int n) {
        int r = 1;
        while (n % p == 0) {
            n /= p;
            r *= p;
        }
        return r;
    };
    return {part(a), part(b)};
}

std::vector<std::vector<std::pair<int, int>>> LabeledGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(torsion.size());
    for (const auto& e : edges) {
        adj[e.i].push_back({e.j, e.degree});
        adj[e.j].push_back({e.i, e.degree});
    }
    return adj;
}

int LabeledGraph::count_p(int p) const {
    if (torsion.empty()) return 0;
    auto adj = adjacency();
    std::vector<bool> seen(torsion.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int n = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++n;
        for (auto [w, d] : adj[v])
            if (d == p && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return n;
}

bool LabeledGraph::connected() const {
    if (torsion.empty()) return true;
    auto adj = adjacency();
    std::vector<bool> seen(torsion.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t n = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++n;
        for (auto [w, d] : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return n == torsion.size();
}

void LabeledGraph::normalize() {
    for (auto& e : edges)
        if (e.i > e.j) std::swap(e.i, e.j);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace itg
