#pragma once

#include <vector>

#include "itg/curve.hpp"
#include "itg/graph.hpp"

namespace itg {

// Cyclic rational kernel of prime degree ell on `base`, which is the
// minimal short model of the curve it was computed for.
struct KernelPoly {
    Curve base;
    int degree = 0;
    PolyQ poly;  // monic, degree (ell - 1) / 2, or 1 for ell = 2
};

// ell in {2, 3, 5, 7, 13}
std::vector<KernelPoly> rational_kernels(const Curve& E, int ell);
// Codomain of the isogeny with kernel K, as a short model.  E must be
// Q-isomorphic to K.base; the computation happens on K.base.
Curve velu(const Curve& E, const KernelPoly& K);

struct SporadicEdge {
    int ell;
    Rational partner_j;
    Curve codomain;
};
std::vector<SporadicEdge> sporadic_isogenies(const Curve& E);

struct SporadicRecord {
    int ell;
    Rational j;
    Rational partner_j;
};
const std::vector<SporadicRecord>& sporadic_table();

// Frobenius trace a_p of the minimal short model, p a good prime >= 5.
long trace_of_frobenius(const ShortModel& M, long p);

struct IsogenyClass {
    std::vector<Curve> curves;  // discovery order, pairwise non-isomorphic
    std::vector<Edge> edges;    // i < j
    std::vector<RationalTorsion> torsion;

    int size() const { return static_cast<int>(curves.size()); }
    LabeledGraph graph() const;
};

// Breadth-first closure under rational_kernels and sporadic_isogenies.
// Throws std::logic_error if more than eight curves appear.
IsogenyClass isogeny_class(const Curve& E);

}  // namespace itg
