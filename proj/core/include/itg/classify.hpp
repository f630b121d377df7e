#pragma once

#include <map>
#include <string>
#include <vector>

#include "itg/exact.hpp"
#include "itg/graph.hpp"
#include "itg/isogeny.hpp"

namespace itg {

// L1, L2(p), L3(p^2), L4, T4, T6, T8, R4(pq), R6 or S.
struct ShapeLabel {
    std::string family;
    int param = 0;  // only for L2, L3, R4

    std::string to_string() const;
    bool operator==(const ShapeLabel&) const = default;
};

struct Template {
    std::string label;  // e.g. "T6^2", "L3^1(9)", "L2(13)"
    ShapeLabel shape;
    LabeledGraph graph;  // vertex k is E_{k+1} of the printed configuration
    bool finite = false;
};

const std::vector<Template>& templates();
const Template& template_by_label(const std::string& label);

// Throws std::logic_error for graphs outside the 26 shapes.
ShapeLabel shape_label(const LabeledGraph& g);
ShapeLabel shape_label(const IsogenyClass& c);

struct ItgMatch {
    const Template* tmpl = nullptr;
    // order[k] is the input vertex sitting at template vertex k
    std::vector<int> order;
    const std::string& label() const { return tmpl->label; }
};

// Labeled-graph isomorphism against the stored templates.  Throws
// std::logic_error if nothing matches.
ItgMatch itg_label(const LabeledGraph& g);
ItgMatch itg_label(const IsogenyClass& c);

struct Finiteness {
    bool finite = false;
    std::vector<Rational> j_list;
};
Finiteness finiteness(const std::string& label);

struct Table1Row {
    std::string label;
    std::vector<TorsionShape> torsion;
    Rational j;
};
const std::vector<Table1Row>& table1();

struct KenkuReport {
    std::map<int, int> counts;  // C_p for every prime edge degree (and 2, 3, 5, 7)
    int total = 0;
    std::vector<std::pair<std::string, bool>> conditions;
    bool ok() const;
};
KenkuReport kenku_audit(const LabeledGraph& g);
KenkuReport kenku_audit(const IsogenyClass& c);

}  // namespace itg
