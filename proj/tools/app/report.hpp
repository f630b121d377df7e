#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "itg/curve.hpp"
#include "itg/galois.hpp"

namespace itg::app {

inline constexpr const char* kVersion = "0.1.0";

struct CurveEntry {
    std::vector<std::string> ainvs;  // minimal short model [0,0,0,A,B]
    std::string j;
    std::string torsion;  // "[a,b]" notation
    bool operator==(const CurveEntry&) const = default;
};

struct EdgeEntry {
    int from = 0;  // 0-based curve indices
    int to = 0;
    int degree = 0;
    bool operator==(const EdgeEntry&) const = default;
};

// Everything in a classify report except the input echo and timing depends
// only on the Q-isomorphism class of the input, which is what makes the
// cache transparent.
struct ClassReport {
    std::map<std::string, std::string> input;  // "curve", "j", "family", "t"
    std::vector<std::string> model;             // input a-invariants
    std::string key;                            // "c4:c6" of the minimal short model
    std::vector<CurveEntry> curves;
    std::vector<EdgeEntry> edges;
    std::string shape;
    std::string label;
    std::vector<int> template_order;  // template vertex k sits at curves[template_order[k]]
    bool finite = false;
    std::vector<std::string> j_list;
    bool kenku_ok = false;
    double elapsed_ms = 0;  // not serialized unless requested
    bool operator==(const ClassReport& o) const;
};

std::string cache_key(const Curve& E);
// Full computation; E is replaced by its minimal short model first.
ClassReport classify_curve(const Curve& E);

nlohmann::ordered_json to_json(const ClassReport& r, bool with_timing = false);
ClassReport class_report_from_json(const nlohmann::json& j);
std::string to_dot(const ClassReport& r);

struct PredictImage {
    int prime = 0;
    int level = 0;
    std::vector<MatModN> gens;
};

struct PredictReport {
    std::vector<PredictImage> images;
    std::map<int, int> used_levels;  // after lifting
    std::vector<std::string> warnings;
    std::vector<std::string> torsion;
    std::vector<std::map<int, std::array<int, 3>>> parts;  // prime -> (x, y, order)
    std::vector<EdgeEntry> edges;
    std::string shape;
    std::string label;
    std::vector<int> template_order;
};

// Throws InadequateLevel when strict and any image is below its adequate
// level; otherwise lifts by full preimage first.
PredictReport predict(const std::vector<PredictImage>& images, bool strict);
nlohmann::ordered_json to_json(const PredictReport& r);
std::string to_dot(const PredictReport& r);

// "a,b,c,d;a,b,c,d;..."
std::vector<MatModN> parse_generators(int level, const std::string& spec);

}  // namespace itg::app
