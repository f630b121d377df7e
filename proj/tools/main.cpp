#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "app/cache.hpp"
#include "app/report.hpp"
#include "app/suites.hpp"
#include "itg/families.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kSingular = 3, kInadequate = 4 };

using namespace itg;
using namespace itg::app;

struct ClassifyArgs {
    std::string curve, j, family, t, cache;
    bool json = false, dot = false, timing = false;
};

struct PredictArgs {
    std::vector<int> levels, primes;
    std::vector<std::string> gens, named;
    bool json = false, dot = false, strict = false;
};

int prime_of_level(int n) {
    for (int p = 2; p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            if (n != 1) throw std::invalid_argument("level must be a prime power");
            return p;
        }
    throw std::invalid_argument("level must be at least 2");
}

void print_text(const ClassReport& r, std::ostream& os) {
    os << "label  " << r.label << " (shape " << r.shape << ", " << (r.finite ? "finite" : "infinite") << " family)\n";
    os << "curves\n";
    for (std::size_t k = 0; k < r.curves.size(); ++k) {
        const auto& c = r.curves[k];
        os << "  E" << k + 1 << "  [" << c.ainvs[0];
        for (std::size_t i = 1; i < c.ainvs.size(); ++i) os << "," << c.ainvs[i];
        os << "]  j = " << c.j << "  torsion " << TorsionShape::parse(c.torsion).group_string() << "\n";
    }
    if (!r.edges.empty()) os << "edges\n";
    for (const auto& e : r.edges) os << "  E" << e.from + 1 << " -- E" << e.to + 1 << "  degree " << e.degree << "\n";
    if (r.finite) {
        os << "j-invariants of this label:";
        for (const auto& j : r.j_list) os << " " << j;
        os << "\n";
    }
    os << "kenku  " << (r.kenku_ok ? "ok" : "VIOLATED") << "\n";
}

int cmd_classify(const ClassifyArgs& a) {
    Curve E;
    std::map<std::string, std::string> input;
    if (!a.curve.empty()) {
        E = parse_curve(a.curve);
        input["curve"] = a.curve;
    } else if (!a.j.empty()) {
        E = curve_from_j(parse_rational(a.j));
        input["j"] = a.j;
    } else {
        if (a.t.empty()) throw CLI::ValidationError("--family needs --t");
        E = family_curve(family_by_name(a.family), parse_rational(a.t));
        input["family"] = a.family;
        input["t"] = a.t;
    }

    ClassReport r;
    const std::string path = resolve_cache_path(a.cache);
    std::optional<ReportCache> cache;
    if (!path.empty()) cache.emplace(path);
    std::optional<ClassReport> hit;
    if (cache) hit = cache->find(cache_key(E));
    if (hit) {
        r = *hit;
        r.model.clear();
        for (const auto& x : E.ainvs()) r.model.push_back(to_string(x));
    } else {
        r = classify_curve(E);
        if (cache) cache->store(r);
    }
    r.input = input;

    if (a.json)
        std::cout << to_json(r, a.timing).dump(2) << "\n";
    else if (a.dot)
        std::cout << to_dot(r);
    else
        print_text(r, std::cout);
    if (a.timing && !a.json) std::cerr << (hit ? "cache hit" : "computed") << " in " << r.elapsed_ms << " ms\n";
    return kOk;
}

int cmd_predict(const PredictArgs& a) {
    std::vector<PredictImage> images;
    for (const auto& name : a.named) {
        GroupModN G = named_group(name);
        images.push_back({prime_of_level(G.level()), G.level(), G.generators()});
    }
    if (a.levels.size() != a.gens.size()) throw CLI::ValidationError("give one --gens per --level");
    if (!a.primes.empty() && a.primes.size() != a.levels.size())
        throw CLI::ValidationError("give one --prime per --level, or none");
    for (std::size_t k = 0; k < a.levels.size(); ++k) {
        int p = prime_of_level(a.levels[k]);
        if (!a.primes.empty() && a.primes[k] != p)
            throw std::invalid_argument("level " + std::to_string(a.levels[k]) + " is not a power of " +
                                        std::to_string(a.primes[k]));
        images.push_back({p, a.levels[k], parse_generators(a.levels[k], a.gens[k])});
    }
    if (images.empty()) throw CLI::ValidationError("predict needs --level/--gens or --named");

    PredictReport r = predict(images, a.strict);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (a.json) {
        std::cout << to_json(r).dump(2) << "\n";
    } else if (a.dot) {
        std::cout << to_dot(r);
    } else {
        std::cout << "label  " << r.label << " (shape " << r.shape << ")\n";
        for (const auto& [p, n] : r.used_levels) std::cout << "level  " << n << " at p = " << p << "\n";
        std::cout << "torsion (";
        for (std::size_t k = 0; k < r.template_order.size(); ++k)
            std::cout << (k ? "," : "") << r.torsion[r.template_order[k]];
        std::cout << ")\n";
    }
    return kOk;
}

int cmd_verify(const std::string& suite, bool json) {
    SuiteResult r = run_suite(suite);
    if (json) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["ok"] = r.ok();
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = items;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks)
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                      << "\n";
        std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](auto& c) { return c.pass; });
        std::cout << r.suite << ": " << passed << "/" << r.checks.size() << " passed in " << r.seconds << " s\n";
    }
    return r.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isogeny-torsion graphs of elliptic curves over Q"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Compute the isogeny-torsion graph of a curve");
    auto* oc = classify->add_option("--curve", ca.curve, "\"[a1,a2,a3,a4,a6]\", \"[A,B]\" or \"y^2=x^3+A*x+B\"");
    auto* oj = classify->add_option("--j", ca.j, "j-invariant p/q");
    auto* of = classify->add_option("--family", ca.family, "Z7, Z9, Z10, Z12, SZ5_L3_25, R6_split or X24e_j");
    classify->add_option("--t", ca.t, "family parameter p/q")->needs(of);
    oc->excludes(oj)->excludes(of);
    oj->excludes(of);
    auto* cj = classify->add_flag("--json", ca.json, "JSON report");
    classify->add_flag("--dot", ca.dot, "Graphviz DOT")->excludes(cj);
    classify->add_option("--cache", ca.cache, "JSON-lines cache file (default: $ITG_CACHE)");
    classify->add_flag("--timing", ca.timing, "report elapsed time");

    PredictArgs pa;
    auto* predict_cmd = app.add_subcommand("predict", "Predict the graph from Galois images at prime powers");
    predict_cmd->add_option("--level", pa.levels, "level of an image (repeatable)");
    predict_cmd->add_option("--gens", pa.gens, "generators \"a,b,c,d;...\" for the matching --level");
    predict_cmd->add_option("--prime", pa.primes, "prime of the matching --level");
    predict_cmd->add_option("--named", pa.named, "named 2-adic group, e.g. H98e (repeatable)");
    predict_cmd->add_flag("--strict", pa.strict, "fail with exit 4 instead of lifting to an adequate level");
    auto* pj = predict_cmd->add_flag("--json", pa.json, "JSON report");
    predict_cmd->add_flag("--dot", pa.dot, "Graphviz DOT")->excludes(pj);

    std::string suite;
    bool vjson = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "lemmas, table1, families or census")
        ->required()
        ->check(CLI::IsMember(itg::app::suite_names()));
    verify->add_flag("--json", vjson, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*classify) {
            if (ca.curve.empty() && ca.j.empty() && ca.family.empty())
                throw CLI::ValidationError("classify needs --curve, --j or --family");
            return cmd_classify(ca);
        }
        if (*predict_cmd) return cmd_predict(pa);
        return cmd_verify(suite, vjson);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const SingularCurve& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const InadequateLevel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInadequate;
    } catch (const InadmissibleParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
}
