#include "cache.hpp"

#include <cstdlib>
#include <fstream>

namespace itg::app {

ReportCache::ReportCache(std::string path) : path_(std::move(path)) { load(); }

void ReportCache::load() {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object()) continue;
        if (rec.value("version", "") != kVersion || !rec.contains("key") || !rec.contains("report")) continue;
        entries_[rec.at("key").get<std::string>()] = rec.at("report");
    }
}

std::optional<ClassReport> ReportCache::find(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    try {
        return class_report_from_json(it->second);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ReportCache::store(const ClassReport& r) {
    ClassReport bare = r;
    bare.input.clear();
    bare.model.clear();
    nlohmann::ordered_json rec;
    rec["version"] = kVersion;
    rec["key"] = r.key;
    rec["report"] = to_json(bare);
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_);
    out << rec.dump() << '\n';
    entries_[r.key] = nlohmann::json::parse(rec["report"].dump());
}

std::string resolve_cache_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ITG_CACHE")) return env;
    return {};
}

}  // namespace itg::app
