#pragma once

#include <compare>
#include <string>
#include <vector>

namespace itg {

// Abelian group Z/a x Z/b with a | b.  The trivial group is (1, 1).
struct TorsionShape {
    int a = 1;
    int b = 1;

    int order() const { return a * b; }
    bool mazur_admissible() const;
    // "[b]" or "[a,b]", the tables' notation
    std::string to_string() const;
    // "Z/bZ" or "Z/aZ x Z/bZ"
    std::string group_string() const;
    static TorsionShape parse(const std::string& s);
    // Invariant factors of a rank <= 2 group from its order and exponent.
    static TorsionShape from_order_exponent(long order, long exponent);
    // Product of coprime shapes.
    TorsionShape operator*(const TorsionShape& o) const;
    // p-primary part
    TorsionShape primary(int p) const;

    auto operator<=>(const TorsionShape&) const = default;
};

struct Edge {
    int i = 0;
    int j = 0;
    int degree = 0;
    auto operator<=>(const Edge&) const = default;
};

// Vertices carry torsion, edges carry prime degrees.  Edges are undirected
// and stored once with i < j.
struct LabeledGraph {
    std::vector<TorsionShape> torsion;
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(torsion.size()); }
    // Size of the component containing vertex 0 using only degree-p edges.
    int count_p(int p) const;
    bool connected() const;
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
    void normalize();  // i < j, sorted, deduplicated
};

}  // namespace itg
