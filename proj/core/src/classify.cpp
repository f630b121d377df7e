#include "itg/classify.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "data.hpp"

namespace itg {

std::string ShapeLabel::to_string() const {
    if (family == "L2" || family == "L3" || family == "R4") return family + "(" + std::to_string(param) + ")";
    return family;
}

const std::vector<Template>& templates() {
    static const std::vector<Template> all = [] {
        std::vector<Template> out;
        auto doc = nlohmann::json::parse(data::embedded().at("templates.json"));
        for (const auto& r : doc.at("templates")) {
            Template t;
            t.label = r.at("label").get<std::string>();
            t.shape = {r.at("shape").get<std::string>(), r.at("param").get<int>()};
            t.finite = r.at("finite").get<bool>();
            for (const auto& v : r.at("vertices")) t.graph.torsion.push_back(TorsionShape::parse(v.get<std::string>()));
            for (const auto& e : r.at("edges"))
                t.graph.edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1, e.at(2).get<int>()});
            t.graph.normalize();
            out.push_back(std::move(t));
        }
        return out;
    }();
    return all;
}

const Template& template_by_label(const std::string& label) {
    for (const auto& t : templates())
        if (t.label == label) return t;
    throw std::invalid_argument("unknown isogeny-torsion label: " + label);
}

namespace {

std::multiset<int> degree_multiset(const LabeledGraph& g) {
    std::multiset<int> d;
    for (const auto& e : g.edges) d.insert(e.degree);
    return d;
}

std::vector<int> valences(const LabeledGraph& g) {
    std::vector<int> v(g.size(), 0);
    for (const auto& e : g.edges) {
        ++v[e.i];
        ++v[e.j];
    }
    return v;
}

[[noreturn]] void unclassifiable(const LabeledGraph& g) {
    throw std::logic_error("isogeny graph with " + std::to_string(g.size()) + " vertices and " +
                           std::to_string(g.edges.size()) + " edges matches no shape");
}

}  // namespace

ShapeLabel shape_label(const LabeledGraph& g) {
    const int n = g.size();
    if (!g.connected() || static_cast<int>(g.edges.size()) < n - 1) unclassifiable(g);
    auto degs = degree_multiset(g);
    std::set<int> primes(degs.begin(), degs.end());
    auto val = valences(g);
    const int maxval = n ? *std::max_element(val.begin(), val.end()) : 0;
    const bool tree = static_cast<int>(g.edges.size()) == n - 1;
    if (n == 1) return {"L1", 0};
    if (n == 2 && tree) return {"L2", *primes.begin()};
    if (n == 3 && tree && primes.size() == 1 && (*primes.begin() == 3 || *primes.begin() == 5))
        return {"L3", *primes.begin() * *primes.begin()};
    if (n == 4 && tree && primes.size() == 1) {
        if (*primes.begin() == 3 && maxval == 2) return {"L4", 0};
        if (*primes.begin() == 2 && maxval == 3) return {"T4", 0};
    }
    if (n == 4 && g.edges.size() == 4 && primes.size() == 2 && maxval == 2) {
        int p = *primes.begin(), q = *primes.rbegin();
        if (degs.count(p) == 2) return {"R4", p * q};
    }
    if (n == 6 && tree && primes == std::set<int>{2} && maxval == 3) return {"T6", 0};
    if (n == 8 && tree && primes == std::set<int>{2} && maxval == 3) return {"T8", 0};
    if (n == 6 && g.edges.size() == 7 && primes == std::set<int>{2, 3} && degs.count(2) == 3) return {"R6", 0};
    if (n == 8 && g.edges.size() == 10 && primes == std::set<int>{2, 3} && degs.count(3) == 4) return {"S", 0};
    unclassifiable(g);
}

ShapeLabel shape_label(const IsogenyClass& c) { return shape_label(c.graph()); }

namespace {

// Assign template vertices 0..n-1 to input vertices, checking torsion and
// every edge between already placed vertices.
bool extend(const LabeledGraph& tg, const std::vector<std::vector<int>>& tdeg,
            const std::vector<std::vector<int>>& gdeg, const LabeledGraph& g, std::vector<int>& order,
            std::vector<bool>& used) {
    const std::size_t k = order.size();
    if (k == tg.torsion.size()) return true;
    for (int v = 0; v < g.size(); ++v) {
        if (used[v] || !(g.torsion[v] == tg.torsion[k])) continue;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            if (tdeg[k][i] != gdeg[v][order[i]]) ok = false;
        if (!ok) continue;
        used[v] = true;
        order.push_back(v);
        if (extend(tg, tdeg, gdeg, g, order, used)) return true;
        order.pop_back();
        used[v] = false;
    }
    return false;
}

std::vector<std::vector<int>> degree_matrix(const LabeledGraph& g) {
    std::vector<std::vector<int>> m(g.size(), std::vector<int>(g.size(), 0));
    for (const auto& e : g.edges) m[e.i][e.j] = m[e.j][e.i] = e.degree;
    return m;
}

}  // namespace

ItgMatch itg_label(const LabeledGraph& g) {
    const ShapeLabel shape = shape_label(g);
    const auto gdeg = degree_matrix(g);
    for (const auto& t : templates()) {
        if (!(t.shape == shape)) continue;
        if (t.graph.edges.size() != g.edges.size()) continue;
        std::vector<int> order;
        std::vector<bool> used(g.size(), false);
        if (extend(t.graph, degree_matrix(t.graph), gdeg, g, order, used)) return {&t, order};
    }
    std::string tors;
    for (const auto& s : g.torsion) tors += s.to_string();
    throw std::logic_error("no isogeny-torsion template matches shape " + shape.to_string() + " with torsion " + tors);
}

ItgMatch itg_label(const IsogenyClass& c) { return itg_label(c.graph()); }

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = [] {
        std::vector<Table1Row> out;
        auto doc = nlohmann::json::parse(data::embedded().at("table1.json"));
        for (const auto& r : doc.at("rows")) {
            Table1Row row;
            row.label = r.at("label").get<std::string>();
            row.j = parse_rational(r.at("j").get<std::string>());
            const std::string tors = r.at("torsion").get<std::string>();
            // "([a],[b,c],...)"
            std::size_t pos = 0;
            while ((pos = tors.find('[', pos)) != std::string::npos) {
                auto end = tors.find(']', pos);
                row.torsion.push_back(TorsionShape::parse(tors.substr(pos, end - pos + 1)));
                pos = end;
            }
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

Finiteness finiteness(const std::string& label) {
    const Template& t = template_by_label(label);
    Finiteness f;
    f.finite = t.finite;
    if (f.finite)
        for (const auto& r : table1())
            if (r.label == label) f.j_list.push_back(r.j);
    return f;
}

bool KenkuReport::ok() const {
    for (const auto& c : conditions)
        if (!c.second) return false;
    return true;
}

KenkuReport kenku_audit(const LabeledGraph& g) {
    KenkuReport r;
    r.total = g.size();
    std::set<int> primes{2, 3, 5, 7};
    for (const auto& e : g.edges) primes.insert(e.degree);
    for (int p : primes) r.counts[p] = g.count_p(p);
    auto C = [&](int p) { return r.counts.count(p) ? r.counts.at(p) : 1; };

    int product = 1;
    for (auto [p, c] : r.counts) product *= c;
    r.conditions.push_back({"C = prod C_p <= 8", product == r.total && r.total <= 8});
    bool caps = true;
    for (auto [p, c] : r.counts) {
        int cap = p == 2 ? 8 : p == 3 ? 4 : p == 5 ? 3 : 2;
        const bool allowed = p <= 19 || p == 37 || p == 43 || p == 67 || p == 163;
        if (!allowed && c > 1) caps = false;
        if (c > cap) caps = false;
    }
    r.conditions.push_back({"C_p within the per-prime bounds", caps});
    bool c1 = true;
    for (auto [p, c] : r.counts)
        if (p > 7 && c == 2 && r.total != 2) c1 = false;
    r.conditions.push_back({"(1) C_p = 2 for p > 7 forces C = 2", c1});
    r.conditions.push_back(
        {"(2) C_7 = 2 implies C <= 4 and (C_3 = 2 or C_2 = 2 or C = 2)",
         C(7) != 2 || (r.total <= 4 && (C(3) == 2 || C(2) == 2 || r.total == 2))});
    r.conditions.push_back({"(3) C_5 <= 3, and C_5 = 3 implies C = 3", C(5) <= 3 && (C(5) != 3 || r.total == 3)});
    r.conditions.push_back(
        {"(4) C_5 = 2 implies C <= 4 and (C_3 = 2 or C_2 = 2 or C = 2)",
         C(5) != 2 || (r.total <= 4 && (C(3) == 2 || C(2) == 2 || r.total == 2))});
    r.conditions.push_back({"(5) C_3 <= 4, and C_3 = 4 implies C = 4", C(3) <= 4 && (C(3) != 4 || r.total == 4)});
    r.conditions.push_back(
        {"(6) C_3 = 3 implies C <= 6 and (C_2 = 2 or C = 3)", C(3) != 3 || (r.total <= 6 && (C(2) == 2 || r.total == 3))});
    r.conditions.push_back({"(7) C_3 = 2 implies C_2 <= 4", C(3) != 2 || C(2) <= 4});
    return r;
}

KenkuReport kenku_audit(const IsogenyClass& c) { return kenku_audit(c.graph()); }

}  // namespace itg
