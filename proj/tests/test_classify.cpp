#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "itg/classify.hpp"
#include "itg/families.hpp"
#include "oracles.hpp"

using namespace itg;

namespace {

LabeledGraph graph_of(std::initializer_list<const char*> torsion, std::initializer_list<Edge> edges) {
    LabeledGraph g;
    for (const char* t : torsion) g.torsion.push_back(TorsionShape::parse(t));
    g.edges = edges;
    g.normalize();
    return g;
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm) {
    LabeledGraph h;
    h.torsion.resize(g.size());
    for (int k = 0; k < g.size(); ++k) h.torsion[perm[k]] = g.torsion[k];
    for (const auto& e : g.edges) h.edges.push_back({perm[e.i], perm[e.j], e.degree});
    h.normalize();
    return h;
}

}  // namespace

TEST_CASE("template catalogue") {
    const auto& all = templates();
    CHECK(all.size() == 52);
    std::map<char, int> by_type;
    int finite = 0;
    std::set<std::string> labels;
    for (const auto& t : all) {
        ++by_type[t.label[0]];
        finite += t.finite;
        labels.insert(t.label);
        CHECK(shape_label(t.graph) == t.shape);
        CHECK(kenku_audit(t.graph).ok());
        for (const auto& s : t.graph.torsion) CHECK(s.mazur_admissible());
    }
    CHECK(labels.size() == 52);
    CHECK(by_type['L'] == 23);
    CHECK(by_type['T'] == 13);
    CHECK(by_type['R'] == 12);
    CHECK(by_type['S'] == 4);
    CHECK(finite == 15);
}

TEST_CASE("shape labels") {
    CHECK(shape_label(graph_of({"[2,2]", "[4]", "[4]", "[2]"}, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}})).to_string() == "T4");
    CHECK(shape_label(graph_of({"[1]"}, {})).to_string() == "L1");
    CHECK(shape_label(graph_of({"[3]", "[3]", "[3]", "[1]"}, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}})).to_string() == "L4");
    CHECK(shape_label(graph_of({"[1]", "[1]"}, {{0, 1, 37}})).to_string() == "L2(37)");
    CHECK_THROWS_AS(shape_label(graph_of({"[1]", "[1]"}, {})), std::logic_error);
}

TEST_CASE("labels of computed classes") {
    CHECK(itg_label(isogeny_class(curve(1, -1, 1, -1, -14))).label() == "T4^1");
    auto l3 = graph_of({"[9]", "[3]", "[1]"}, {{0, 1, 3}, {1, 2, 3}});
    CHECK(itg_label(l3).label() == "L3^1(9)");
    auto s = isogeny_class(family_curve(family_by_name("Z12"), 2));
    CHECK(s.size() == 8);
    CHECK(itg_label(s).label() == "S^1");
}

TEST_CASE("finiteness") {
    Finiteness l11 = finiteness("L2(11)");
    CHECK(l11.finite);
    CHECK(std::set<Rational>(l11.j_list.begin(), l11.j_list.end()) ==
          std::set<Rational>{Rational(-11) * 131 * 131 * 131, -32768, -121});
    Finiteness l4 = finiteness("L4^1");
    CHECK(l4.finite);
    REQUIRE(l4.j_list.size() == 1);
    CHECK(l4.j_list[0] == Rational(-32768) * 3 * 125);
    CHECK(l4.j_list[0] == -12288000);
    CHECK_FALSE(finiteness("T4^1").finite);
    CHECK(finiteness("T4^1").j_list.empty());
    CHECK_THROWS_AS(finiteness("Q9"), std::invalid_argument);
}

TEST_CASE("finite-label table rows") {
    CHECK(table1().size() == 23);
    std::set<std::string> finite_labels;
    for (const auto& t : templates())
        if (t.finite) finite_labels.insert(t.label);
    std::set<std::string> row_labels;
    for (const auto& r : table1()) {
        row_labels.insert(r.label);
        CHECK(template_by_label(r.label).graph.torsion == r.torsion);
    }
    CHECK(row_labels == finite_labels);
}

TEST_CASE("Kenku audit") {
    KenkuReport a = kenku_audit(isogeny_class(curve(1, -1, 1, -1, -14)));
    CHECK(a.counts.at(2) == 4);
    CHECK(a.total == 4);
    CHECK(a.ok());

    KenkuReport b = kenku_audit(isogeny_class(curve(0, -1, 1, 0, 0)));
    CHECK(b.counts.at(5) == 3);
    CHECK(b.total == 3);
    CHECK(b.ok());

    KenkuReport s = kenku_audit(isogeny_class(family_curve(family_by_name("Z12"), 3)));
    CHECK(s.counts.at(2) == 4);
    CHECK(s.counts.at(3) == 2);
    CHECK(s.total == 8);
    CHECK(s.ok());

    // a 5-edge hanging off a 3-chain breaks condition (3)
    auto bad = graph_of({"[1]", "[1]", "[1]", "[1]"}, {{0, 1, 5}, {1, 2, 5}, {2, 3, 3}});
    CHECK_FALSE(kenku_audit(bad).ok());
}

TEST_CASE("property: labels are invariant under vertex relabelling") {
    for (const auto& t : templates()) {
        std::vector<int> perm(t.graph.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(perm.begin(), perm.end(), oracle::rng());
            LabeledGraph g = relabel(t.graph, perm);
            ItgMatch m = itg_label(g);
            CHECK(m.label() == t.label);
            // the match maps template vertices onto the relabelled ones
            for (int k = 0; k < t.graph.size(); ++k) CHECK(g.torsion[m.order[k]] == t.graph.torsion[k]);
        }
    }
}

TEST_CASE("property: torsion is even across 2-edges") {
    // a rational 2-torsion point on one curve forces one on every isogenous curve
    for (const auto& t : templates()) {
        bool any2 = false, all2 = true;
        for (const auto& s : t.graph.torsion) {
            bool even = s.b % 2 == 0;
            any2 = any2 || even;
            all2 = all2 && even;
        }
        CHECK(any2 == all2);
    }
}

TEST_CASE("templates are distinguishable") {
    const auto& all = templates();
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(itg_label(all[i].graph).label() == all[i].label);
}
