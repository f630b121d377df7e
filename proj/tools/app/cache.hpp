#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "report.hpp"

namespace itg::app {

// Append-only JSON-lines store of classify reports keyed by the (c4, c6)
// pair of the minimal short model and the report version.  Records from
// other versions and unreadable lines are ignored.
class ReportCache {
public:
    explicit ReportCache(std::string path);
    const std::string& path() const { return path_; }
    std::optional<ClassReport> find(const std::string& key) const;
    void store(const ClassReport& r);

private:
    void load();
    std::string path_;
    std::map<std::string, nlohmann::json> entries_;
    mutable std::mutex mu_;
};

// --cache beats ITG_CACHE; empty means no caching.
std::string resolve_cache_path(const std::string& flag);

}  // namespace itg::app
