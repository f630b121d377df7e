// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "app/suites.hpp"
#include "itg/classify.hpp"
#include "itg/families.hpp"
#include "itg/galois.hpp"
#include "oracles.hpp"

using namespace itg;
using namespace itg::app;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Every graph produced while checking criteria 2-6, for criterion 8.
std::vector<std::pair<std::string, LabeledGraph>> g_seen;

LabeledGraph remember(const std::string& what, const LabeledGraph& g) {
    g_seen.push_back({what, g});
    return g;
}

std::string failures(const SuiteResult& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.pass) s += (s.empty() ? "" : "; ") + c.name + " [" + c.detail + "]";
    return s;
}

Outcome suite_with_budget(SuiteResult r, double budget) {
    std::ostringstream os;
    std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](auto& c) { return c.pass; });
    os << passed << "/" << r.checks.size() << " checks in " << r.seconds << " s (budget " << budget << " s)";
    if (!r.ok()) os << "; failed: " << failures(r);
    return {r.ok() && r.seconds < budget, os.str()};
}

Outcome lemmas() {
    SuiteResult r = verify_lemmas();
    return suite_with_budget(r, 60);
}

Outcome census() {
    SuiteResult r = verify_census();
    for (const auto& [name, label] : census_expectations())
        remember(name, predicted_graph(lift_to_adequate({{2, named_group(name)}})).graph);
    return suite_with_budget(r, 300);
}

Outcome table1_rows() {
    SuiteResult r = verify_table1();
    for (const auto& row : table1()) remember("j=" + to_string(row.j), isogeny_class(curve_from_j(row.j)).graph());
    remember("y^2=x^3+16", isogeny_class(short_curve(0, 16)).graph());
    return suite_with_budget(r, 600);
}

Outcome example_17a() {
    IsogenyClass c = isogeny_class(curve(1, -1, 1, -1, -14));
    LabeledGraph g = remember("17a", c.graph());
    std::vector<int> val(c.size(), 0);
    bool all2 = true;
    for (const auto& e : c.edges) {
        ++val[e.i];
        ++val[e.j];
        all2 = all2 && e.degree == 2;
    }
    int hubs = static_cast<int>(std::count(val.begin(), val.end(), 3));
    std::multiset<TorsionShape> tors;
    for (const auto& t : c.torsion) tors.insert(t.shape);
    std::multiset<TorsionShape> want{{2, 2}, {1, 4}, {1, 4}, {1, 2}};
    std::string label = itg_label(g).label();
    bool ok = c.size() == 4 && c.edges.size() == 3 && all2 && hubs == 1 && tors == want && label == "T4^1";
    return {ok, std::to_string(c.size()) + " curves, " + std::to_string(c.edges.size()) + " edges, label " + label};
}

Outcome families() {
    SuiteResult r = verify_families();
    for (const auto& spec : family_specs())
        for (const auto& t : family_samples(spec.name))
            remember(spec.name, isogeny_class(family_curve(spec, t)).graph());
    return suite_with_budget(r, 300);
}

Outcome twists() {
    std::vector<std::string> bad;
    auto label_of = [](const std::string& what, const Curve& E) {
        return itg_label(remember(what, isogeny_class(E).graph())).label();
    };
    Curve z12 = family_curve(family_by_name("Z12"), Rational(1, 3));
    std::string base = label_of("Z12", z12);
    if (base != "S^1") bad.push_back("Z12 t=1/3 is " + base);
    for (auto [d, want] : {std::pair{-1L, "S^3"}, {-3L, "S^2"}}) {
        std::string got = label_of("Z12 twist", quadratic_twist(z12, d));
        if (got != want) bad.push_back("Z12 twist by " + std::to_string(d) + " gave " + got);
    }
    Curve z7 = family_curve(family_by_name("Z7"), 2);
    if (label_of("Z7", z7) != "L2^1(7)") bad.push_back("Z7 t=2 is not L2^1(7)");
    for (long d : {-1L, 2L, 3L, -3L, 5L, -5L, 13L}) {
        std::string got = label_of("Z7 twist", quadratic_twist(z7, d));
        if (got != "L2^2(7)") bad.push_back("Z7 twist by " + std::to_string(d) + " gave " + got);
    }
    std::string detail = "S^1 -> S^3 (d=-1), S^2 (d=-3); L2^1(7) -> L2^2(7) for 7 twists";
    for (const auto& b : bad) detail += "; " + b;
    return {bad.empty(), detail};
}

Curve random_curve(long bound) {
    for (;;) {
        std::array<Rational, 5> a;
        for (auto& x : a) x = oracle::uniform(-bound, bound);
        try {
            return curve(a);
        } catch (const SingularCurve&) {
        }
    }
}

Outcome oracle_equivalence() {
    int torsion_ok = 0, nontrivial = 0;
    std::vector<std::string> bad;
    for (int k = 0; k < 50; ++k) {
        Curve E = random_curve(20);
        std::array<oracle::Z, 5> a;
        for (int i = 0; i < 5; ++i) a[i] = E.ainvs()[i].get_num();
        auto [A, B] = oracle::short_integral(a);
        auto [ta, tb] = oracle::torsion_lutz_nagell(A, B);
        TorsionShape got = torsion_subgroup(E).shape;
        if (got == TorsionShape{ta, tb}) ++torsion_ok;
        else bad.push_back(E.to_string() + " torsion " + got.to_string());
        nontrivial += got.order() > 1;
    }

    auto sorted_j = [](const IsogenyClass& c) {
        std::vector<Rational> js;
        for (const auto& E : c.curves) js.push_back(E.j);
        std::sort(js.begin(), js.end());
        return js;
    };
    auto degrees = [](const IsogenyClass& c) {
        std::multiset<int> d;
        for (const auto& e : c.edges) d.insert(e.degree);
        return d;
    };
    int class_ok = 0, multi = 0;
    for (int k = 0, draws = 0; k < 20; ++draws) {
        Curve E = random_curve(20);
        IsogenyClass c = isogeny_class(E);
        if (c.size() == 1 && draws < 2000 && k % 2 == 0) continue;  // half the sample from nontrivial classes
        ++k;
        multi += c.size() > 1;
        bool ok = true;
        const std::string label = itg_label(c).label();
        for (int v = 1; v < c.size(); ++v) {
            IsogenyClass d = isogeny_class(c.curves[v]);
            ok = ok && itg_label(d).label() == label && sorted_j(d) == sorted_j(c) && degrees(d) == degrees(c);
        }
        for (long d : {-1L, 2L, -3L}) {
            IsogenyClass t = isogeny_class(quadratic_twist(E, d));
            ok = ok && shape_label(t) == shape_label(c) && degrees(t) == degrees(c) && sorted_j(t) == sorted_j(c);
        }
        if (ok) ++class_ok;
        else bad.push_back(E.to_string() + " class not invariant");
    }
    std::string detail = "torsion " + std::to_string(torsion_ok) + "/50 (" + std::to_string(nontrivial) +
                         " nontrivial), classes " + std::to_string(class_ok) + "/20 (" + std::to_string(multi) +
                         " with isogenies)";
    for (const auto& b : bad) detail += "; " + b;
    return {torsion_ok == 50 && class_ok == 20, detail};
}

Outcome global_census() {
    std::set<std::string> labels;
    for (const auto& t : templates()) labels.insert(t.label);
    std::vector<std::string> bad;
    for (const auto& [what, g] : g_seen) {
        bool ok = g.size() <= 8 && kenku_audit(g).ok();
        for (const auto& t : g.torsion) ok = ok && t.mazur_admissible();
        try {
            ok = ok && labels.count(itg_label(g).label());
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) bad.push_back(what);
    }
    std::set<std::string> finite, rows;
    for (const auto& t : templates())
        if (finiteness(t.label).finite) finite.insert(t.label);
    for (const auto& r : table1()) rows.insert(r.label);
    bool finite_ok = finite.size() == 15 && finite == rows;
    std::string detail = std::to_string(g_seen.size()) + " classes audited, " + std::to_string(labels.size()) +
                         " templates, " + std::to_string(finite.size()) + " finite labels";
    for (const auto& b : bad) detail += "; failed: " + b;
    return {bad.empty() && finite_ok && labels.size() == 52 && !g_seen.empty(), detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 lemma suite for p in {3,5,7,11,13}", lemmas},
        {"2 census of the 13 2-adic images", census},
        {"3 finite-label j table and the L4 j-multiset", table1_rows},
        {"4 conductor-17 class", example_17a},
        {"5 parametrized families end to end", families},
        {"6 twist toggling", twists},
        {"7 oracle equivalence on random curves", oracle_equivalence},
        {"8 global census property", global_census},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("%s  criterion %s  (%.2f s)  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), s, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
