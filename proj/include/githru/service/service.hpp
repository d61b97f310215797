#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "githru/analytics/compare.hpp"
#include "githru/analytics/graph.hpp"
#include "githru/error.hpp"
#include "githru/service/lru_cache.hpp"
#include "githru/snapshot.hpp"
#include "json.hpp"

namespace githru::service {

using QueryParams = std::multimap<std::string, std::string>;

struct Request {
    std::string method;  // "GET" or "POST"
    std::string path;    // without the query string
    QueryParams query;
    std::string body;
};

struct Response {
    int status = 200;
    nlohmann::json body;

    std::string text() const { return body.dump(); }
};

inline constexpr std::size_t kDefaultCacheCapacity = 64;

/// Parses graph parameters from a query map. Unknown keys are ignored.
/// Throws Error(InvalidParams).
analytics::GraphParams parse_graph_params(const QueryParams& query);

/// HTTP status for an error code.
int status_of(ErrorCode code) noexcept;

/// Routes requests over a set of immutable snapshots. Safe to call from
/// many threads at once.
class Service {
public:
    explicit Service(std::size_t cache_capacity = kDefaultCacheCapacity);

    /// Throws Error(DuplicateRepo).
    void add_snapshot(std::shared_ptr<const AnalysisSnapshot> snapshot);

    /// Throws Error(UnknownRepo).
    std::shared_ptr<const AnalysisSnapshot> snapshot(const std::string& repo_id) const;

    /// Cached graph for a repository and parameter set.
    std::shared_ptr<const analytics::Graph> graph(const AnalysisSnapshot& snap, const analytics::GraphParams& params);

    /// Never throws; errors become 4xx/5xx responses.
    Response handle(const Request& request);

    std::size_t cache_size() const { return cache_.size(); }
    std::size_t cache_hits() const { return cache_.hits(); }

private:
    struct Repo {
        std::shared_ptr<const AnalysisSnapshot> snapshot;
        std::mutex selections_mutex;
        std::map<std::string, analytics::Selection> selections;
        std::size_t next_selection = 1;
    };

    Repo& repo(const std::string& repo_id) const;

    Response post_repo(const Request& request);
    Response get_graph(Repo& repo, const Request& request);
    Response get_summary(Repo& repo, const Request& request);
    Response get_detail(Repo& repo, const std::string& cluster_id, const Request& request);
    Response post_selection(Repo& repo, const Request& request);
    Response post_compare(Repo& repo, const Request& request);
    Response get_search(Repo& repo, const Request& request);
    Response get_timeline(Repo& repo);

    mutable std::shared_mutex repos_mutex_;
    std::map<std::string, std::unique_ptr<Repo>> repos_;
    LruCache<std::string, std::shared_ptr<const analytics::Graph>> cache_;
};

}  // namespace githru::service
