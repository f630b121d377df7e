#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "itg/classify.hpp"
#include "itg/families.hpp"
#include "itg/galois.hpp"
#include "itg/gl2.hpp"

namespace itg::app {

bool SuiteResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, Check>>& checks) {
    std::vector<CheckResult> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < checks.size();) {
            try {
                out[k] = checks[k].second();
            } catch (const std::exception& e) {
                out[k] = {{}, false, std::string("exception: ") + e.what()};
            }
            out[k].name = checks[k].first;
        }
    };
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), checks.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

namespace {

SuiteResult timed(const std::string& name, const std::vector<std::pair<std::string, Check>>& checks) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{name, run_checks(checks), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CheckResult expect(bool pass, std::string detail) { return {{}, pass, std::move(detail)}; }

std::string tuple_string(const std::vector<TorsionShape>& t) {
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + t[k].to_string();
    return s + ")";
}

// Torsion of the graph listed in template order.
std::vector<TorsionShape> in_template_order(const LabeledGraph& g, const ItgMatch& m) {
    std::vector<TorsionShape> out;
    for (int k : m.order) out.push_back(g.torsion[k]);
    return out;
}

}  // namespace

SuiteResult verify_lemmas() {
    std::vector<std::pair<std::string, Check>> checks;
    for (int p : {3, 5, 7, 11, 13}) {
        const std::string ps = std::to_string(p);
        checks.push_back({"B_" + ps + " has one index-2 subgroup", [p] {
                              auto n = subgroups_of_index(borel(p), 2).size();
                              return expect(n == 1, std::to_string(n) + " found");
                          }});
        checks.push_back({"<B_" + ps + ", -Id> has three index-2 subgroups", [p] {
                              auto n = subgroups_of_index(twist_closure(borel(p)), 2).size();
                              return expect(n == 3, std::to_string(n) + " found");
                          }});
        checks.push_back({"rational points classification at p = " + ps,
                          [p] { return expect(verify_borel_classification(p), ""); }});
    }
    for (int p : {3, 5})
        checks.push_back({"split Cartan characterization at p = " + std::to_string(p),
                          [p] { return expect(verify_split_cartan(p), ""); }});
    for (int p : {3, 5, 7})
        checks.push_back({"<B_" + std::to_string(p) + ", -Id> leaves no point of order " + std::to_string(p), [p] {
                              auto pg = predicted_graph(lift_to_adequate({{p, twist_closure(borel(p))}}));
                              bool ok = true;
                              for (const auto& t : pg.graph.torsion) ok = ok && t.primary(p).order() == 1;
                              return expect(ok, tuple_string(pg.graph.torsion));
                          }});
    for (const char* name : {"H24", "H98", "H215"})
        checks.push_back({std::string(name) + " contains -Id and forces no point of order 4", [name] {
                              GroupModN G = named_group(name);
                              auto pg = predicted_graph(lift_to_adequate({{2, G}}));
                              bool ok = G.contains(minus_id(G.level()));
                              for (const auto& t : pg.graph.torsion) ok = ok && t.b % 4 != 0;
                              return expect(ok, tuple_string(pg.graph.torsion));
                          }});
    return timed("lemmas", checks);
}

SuiteResult verify_table1() {
    std::vector<std::pair<std::string, Check>> checks;
    checks.push_back({"the finite-label table lists 23 j-invariants", [] {
                          return expect(table1().size() == 23, std::to_string(table1().size()) + " rows");
                      }});
    for (const auto& row : table1()) {
        checks.push_back({row.label + " j = " + to_string(row.j), [&row] {
                              IsogenyClass c = isogeny_class(curve_from_j(row.j));
                              LabeledGraph g = c.graph();
                              const ShapeLabel want = template_by_label(row.label).shape;
                              const ShapeLabel got = shape_label(g);
                              ItgMatch m = itg_label(g);
                              bool ok = got == want && kenku_audit(g).ok() && template_by_label(m.label()).finite;
                              return expect(ok, "class " + m.label() + " " + tuple_string(in_template_order(g, m)));
                          }});
    }
    checks.push_back({"y^2 = x^3 + 16 class has j-multiset {0,0,-12288000,-12288000}", [] {
                          IsogenyClass c = isogeny_class(short_curve(0, 16));
                          std::vector<Rational> js;
                          for (const auto& E : c.curves) js.push_back(E.j);
                          std::sort(js.begin(), js.end());
                          std::vector<Rational> want{-12288000, -12288000, 0, 0};
                          ItgMatch m = itg_label(c);
                          return expect(js == want && m.label() == "L4^1", m.label());
                      }});
    return timed("table1", checks);
}

std::vector<Rational> family_samples(const std::string& family) {
    if (family == "Z12") return {2, 3, -1, Rational(1, 3), 5};
    if (family == "R6_split") return {3, -2, 5, 7, 4};
    if (family == "Z7" || family == "Z9") return {2, 3, -1, -2, 5};
    return {2, 3, -2, 5, 7};
}

SuiteResult verify_families() {
    std::vector<std::pair<std::string, Check>> checks;
    for (const auto& spec : family_specs())
        for (const auto& t : family_samples(spec.name))
            checks.push_back({spec.name + " t = " + to_string(t), [&spec, t] {
                                  IsogenyClass c = isogeny_class(family_curve(spec, t));
                                  ItgMatch m = itg_label(c);
                                  std::string got = spec.shape_only ? m.tmpl->shape.to_string() : m.label();
                                  return expect(got == expected_label(spec), "got " + m.label());
                              }});
    return timed("families", checks);
}

const std::vector<std::pair<std::string, std::string>>& census_expectations() {
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"H24e", "T4^1"},  {"H24d", "T4^2"},  {"H24", "T4^3"},    {"H98e", "T6^1"},  {"H98h", "T6^2"},
        {"H98o", "T6^3"},  {"H98", "T6^4"},   {"H193n", "T8^1"},  {"H194l", "T8^2"}, {"H215c", "T8^3"},
        {"H215l", "T8^4"}, {"H215k", "T8^5"}, {"H215", "T8^6"},
    };
    return rows;
}

SuiteResult verify_census() {
    std::vector<std::pair<std::string, Check>> checks;
    for (const auto& [name, label] : census_expectations())
        checks.push_back({name + " -> " + label, [name = name, label = label] {
                              auto images = lift_to_adequate({{2, named_group(name)}});
                              PredictedGraph pg = predicted_graph(images);
                              ItgMatch m = itg_label(pg.graph);
                              auto got = in_template_order(pg.graph, m);
                              bool ok = m.label() == label && got == template_by_label(label).graph.torsion;
                              return expect(ok, "level " + std::to_string(images.at(2).level()) + " " + m.label() +
                                                    " " + tuple_string(got));
                          }});
    return timed("census", checks);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemmas", "table1", "families", "census"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    if (name == "lemmas") return verify_lemmas();
    if (name == "table1") return verify_table1();
    if (name == "families") return verify_families();
    if (name == "census") return verify_census();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace itg::app
