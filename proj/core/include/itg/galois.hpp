#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itg/gl2.hpp"
#include "itg/graph.hpp"

namespace itg {

// A cyclic subgroup <generator> of (Z/NZ)^2.  The generator is the
// canonical one (smallest code among generators of the subgroup).
struct CyclicSubmodule {
    int level = 1;
    std::array<int, 2> generator{0, 0};
    int order = 1;

    bool operator==(const CyclicSubmodule&) const = default;
    // all elements, as codes x * level + y
    std::vector<int> elements() const;
    bool contains(int x, int y) const;
    bool contains(const CyclicSubmodule& o) const;
};

// Thrown when a group is not given at a level large enough for the
// requested torsion computation.
class InadequateLevel : public std::runtime_error {
public:
    InadequateLevel(int prime, int have, int need);
    int prime;
    int have;
    int need;
};

// Exponent cap e_p: the largest k with Z/p^k possible in E(Q)_tors.
int mazur_exponent(int p);
// p^(v_p(h) + e_p)
int adequate_level(int p, int h);

CyclicSubmodule make_submodule(int level, int x, int y);

// Subgroup of (Z/NZ)^2 fixed by every element of G.
TorsionShape fixed_points(const GroupModN& G);
std::vector<CyclicSubmodule> stable_cyclic_submodules(const GroupModN& G);
bool is_stable(const GroupModN& G, const CyclicSubmodule& C);
// {v : g v - v in C for all g} / C.  Requires an adequate level for the
// order of C and throws std::domain_error when the result is not one of
// Mazur's groups (the image is then not a Galois image).
TorsionShape quotient_rational_torsion(const GroupModN& G, const CyclicSubmodule& C);

struct PredictedVertex {
    std::map<int, CyclicSubmodule> parts;  // prime -> submodule
    TorsionShape torsion;
};

struct PredictedGraph {
    std::vector<PredictedVertex> vertices;
    LabeledGraph graph;
};

// Vertices are tuples of per-prime stable cyclic submodules; primes not in
// the map are treated as having full image.  Every group must be of prime
// power level.  Throws InadequateLevel, or std::domain_error when the
// Kenku bounds fail.
PredictedGraph predicted_graph(const std::map<int, GroupModN>& images);

// Lift each image until predicted_graph stops reporting InadequateLevel.
std::map<int, GroupModN> lift_to_adequate(std::map<int, GroupModN> images);

}  // namespace itg
