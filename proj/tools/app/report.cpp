#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "itg/classify.hpp"
#include "itg/isogeny.hpp"

namespace itg::app {

namespace {

std::string rat(const Rational& q) { return to_string(q); }

std::string dot_label(const std::string& torsion) {
    std::string s = TorsionShape::parse(torsion).group_string();
    auto pos = s.find(" x ");
    if (pos != std::string::npos) s.replace(pos, 3, " × ");
    return s;
}

std::vector<EdgeEntry> edge_entries(const std::vector<Edge>& edges) {
    std::vector<EdgeEntry> out;
    for (const auto& e : edges) out.push_back({e.i, e.j, e.degree});
    return out;
}

}  // namespace

bool ClassReport::operator==(const ClassReport& o) const {
    return input == o.input && model == o.model && key == o.key && curves == o.curves && edges == o.edges &&
           shape == o.shape && label == o.label && template_order == o.template_order && finite == o.finite &&
           j_list == o.j_list && kenku_ok == o.kenku_ok;
}

std::string cache_key(const Curve& E) {
    ShortModel M = minimal_short_model(E);
    Integer c4 = -48 * M.A, c6 = -864 * M.B;
    return to_string(c4) + ":" + to_string(c6);
}

ClassReport classify_curve(const Curve& E) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassReport r;
    for (const auto& a : E.ainvs()) r.model.push_back(rat(a));
    ShortModel M = minimal_short_model(E);
    r.key = to_string(Integer(-48 * M.A)) + ":" + to_string(Integer(-864 * M.B));

    IsogenyClass c = isogeny_class(short_curve(Rational(M.A), Rational(M.B)));
    for (int k = 0; k < c.size(); ++k) {
        CurveEntry e;
        ShortModel m = minimal_short_model(c.curves[k]);
        e.ainvs = {"0", "0", "0", to_string(m.A), to_string(m.B)};
        e.j = rat(c.curves[k].j);
        e.torsion = c.torsion[k].shape.to_string();
        r.curves.push_back(std::move(e));
    }
    r.edges = edge_entries(c.edges);
    LabeledGraph g = c.graph();
    r.shape = shape_label(g).to_string();
    ItgMatch m = itg_label(g);
    r.label = m.label();
    r.template_order = m.order;
    Finiteness f = finiteness(r.label);
    r.finite = f.finite;
    for (const auto& j : f.j_list) r.j_list.push_back(rat(j));
    r.kenku_ok = kenku_audit(g).ok();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::ordered_json to_json(const ClassReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.input) input[k] = v;
    j["input"] = input;
    j["model"] = r.model;
    j["key"] = r.key;
    nlohmann::ordered_json curves = nlohmann::ordered_json::array();
    for (const auto& c : r.curves)
        curves.push_back({{"ainvs", c.ainvs}, {"j", c.j}, {"torsion", c.torsion}});
    j["curves"] = curves;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : r.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"degree", e.degree}});
    j["edges"] = edges;
    j["shape"] = r.shape;
    j["label"] = r.label;
    j["template_order"] = r.template_order;
    j["finite"] = r.finite;
    j["j_list"] = r.j_list;
    j["kenku_ok"] = r.kenku_ok;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

ClassReport class_report_from_json(const nlohmann::json& j) {
    if (j.at("version").get<std::string>() != kVersion)
        throw std::invalid_argument("report version mismatch: " + j.at("version").get<std::string>());
    ClassReport r;
    for (const auto& [k, v] : j.at("input").items()) r.input[k] = v.get<std::string>();
    r.model = j.at("model").get<std::vector<std::string>>();
    r.key = j.at("key").get<std::string>();
    for (const auto& c : j.at("curves"))
        r.curves.push_back({c.at("ainvs").get<std::vector<std::string>>(), c.at("j").get<std::string>(),
                            c.at("torsion").get<std::string>()});
    for (const auto& e : j.at("edges"))
        r.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("degree").get<int>()});
    r.shape = j.at("shape").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.template_order = j.at("template_order").get<std::vector<int>>();
    r.finite = j.at("finite").get<bool>();
    r.j_list = j.at("j_list").get<std::vector<std::string>>();
    r.kenku_ok = j.at("kenku_ok").get<bool>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

namespace {

std::string dot_graph(const std::string& title, const std::vector<std::string>& torsion,
                      const std::vector<EdgeEntry>& edges) {
    std::ostringstream os;
    os << "graph \"" << title << "\" {\n";
    for (std::size_t k = 0; k < torsion.size(); ++k)
        os << "  E" << k + 1 << " [label=\"" << dot_label(torsion[k]) << "\"];\n";
    for (const auto& e : edges)
        os << "  E" << e.from + 1 << " -- E" << e.to + 1 << " [label=\"" << e.degree << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const ClassReport& r) {
    std::vector<std::string> tors;
    for (const auto& c : r.curves) tors.push_back(c.torsion);
    return dot_graph(r.label, tors, r.edges);
}

std::vector<MatModN> parse_generators(int level, const std::string& spec) {
    std::vector<MatModN> out;
    std::stringstream groups(spec);
    std::string item;
    while (std::getline(groups, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<long> v;
        std::stringstream entries(item);
        std::string e;
        while (std::getline(entries, e, ',')) {
            std::size_t used = 0;
            long x = 0;
            try {
                x = std::stol(e, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad matrix entry '" + e + "'");
            }
            if (e.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument("bad matrix entry '" + e + "'");
            v.push_back(x);
        }
        if (v.size() != 4) throw std::invalid_argument("a generator needs four entries a,b,c,d: '" + item + "'");
        MatModN m(level, v[0], v[1], v[2], v[3]);
        if (!m.invertible()) throw std::invalid_argument("generator " + m.to_string() + " is not invertible");
        out.push_back(m);
    }
    if (out.empty()) throw std::invalid_argument("no generators given");
    return out;
}

PredictReport predict(const std::vector<PredictImage>& images, bool strict) {
    PredictReport r;
    r.images = images;
    std::map<int, GroupModN> groups;
    for (const auto& im : images) {
        if (groups.count(im.prime)) throw std::invalid_argument("two images given for prime " + std::to_string(im.prime));
        GroupModN G = generate(im.level, im.gens);
        GroupPredicates pr = predicates(G);
        if (!pr.full_determinant)
            throw std::invalid_argument("image at prime " + std::to_string(im.prime) + " does not have full determinant");
        if (!pr.has_cc_representative)
            throw std::invalid_argument("image at prime " + std::to_string(im.prime) +
                                        " contains no complex-conjugation representative");
        if (!pr.contains_minus_id)
            r.warnings.push_back("image at prime " + std::to_string(im.prime) +
                                 " does not contain -Id; the prediction is for this twist only");
        groups.emplace(im.prime, G);
    }
    if (!strict) groups = lift_to_adequate(groups);
    PredictedGraph pg = predicted_graph(groups);
    for (const auto& [p, G] : groups) r.used_levels[p] = G.level();
    for (const auto& v : pg.vertices) {
        r.torsion.push_back(v.torsion.to_string());
        std::map<int, std::array<int, 3>> parts;
        for (const auto& [p, C] : v.parts) parts[p] = {C.generator[0], C.generator[1], C.order};
        r.parts.push_back(parts);
    }
    r.edges = edge_entries(pg.graph.edges);
    r.shape = shape_label(pg.graph).to_string();
    ItgMatch m = itg_label(pg.graph);
    r.label = m.label();
    r.template_order = m.order;
    return r;
}

nlohmann::ordered_json to_json(const PredictReport& r) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    nlohmann::ordered_json images = nlohmann::ordered_json::array();
    for (const auto& im : r.images) {
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const auto& g : im.gens) gens.push_back({g.a, g.b, g.c, g.d});
        images.push_back({{"prime", im.prime},
                          {"level", im.level},
                          {"used_level", r.used_levels.at(im.prime)},
                          {"generators", gens}});
    }
    j["images"] = images;
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < r.torsion.size(); ++k) {
        nlohmann::ordered_json parts = nlohmann::ordered_json::object();
        for (const auto& [p, g] : r.parts[k])
            parts[std::to_string(p)] = {{"generator", {g[0], g[1]}}, {"order", g[2]}};
        vertices.push_back({{"torsion", r.torsion[k]}, {"submodules", parts}});
    }
    j["vertices"] = vertices;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : r.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"degree", e.degree}});
    j["edges"] = edges;
    j["shape"] = r.shape;
    j["label"] = r.label;
    j["template_order"] = r.template_order;
    j["warnings"] = r.warnings;
    return j;
}

std::string to_dot(const PredictReport& r) { return dot_graph(r.label, r.torsion, r.edges); }

}  // namespace itg::app
