#include "githru/analytics/search.hpp"

#include <algorithm>

#include "githru/error.hpp"

namespace githru::analytics {
namespace {

bool commit_hit(const ingest::CommitRecord& c, std::string_view q) {
    auto any = [&](const std::vector<std::string>& list) {
        return std::any_of(list.begin(), list.end(), [&](const std::string& s) { return contains_ignore_case(s, q); });
    };
    if (contains_ignore_case(c.id, q) || contains_ignore_case(c.message, q) || contains_ignore_case(c.author_name, q))
        return true;
    if (any(c.branch_heads) || any(c.tags)) return true;
    return std::any_of(c.file_changes.begin(), c.file_changes.end(),
                       [&](const ingest::FileChange& fc) { return contains_ignore_case(fc.path, q); });
}

}  // namespace

std::set<CommitIndex> search_nodes(const AnalysisSnapshot& snap, const View& view, std::span<const std::string> queries) {
    if (queries.empty()) throw Error(ErrorCode::EmptyQuery, "search needs a query");
    for (const auto& q : queries)
        if (q.empty()) throw Error(ErrorCode::EmptyQuery, "search query is empty");

    std::set<CommitIndex> hits;
    for (const auto& stem : view.stems) {
        for (const auto& node : stem.nodes) {
            const auto commits = node_commits(snap, node);
            const bool hit = std::any_of(queries.begin(), queries.end(), [&](const std::string& q) {
                if (contains_ignore_case(stem.name, q) || contains_ignore_case(node_message(snap, node), q)) return true;
                return std::any_of(commits.begin(), commits.end(),
                                   [&](CommitIndex c) { return commit_hit(snap.commit(c), q); });
            });
            if (hit) hits.insert(node.base);
        }
    }
    return hits;
}

std::set<std::string> search(const AnalysisSnapshot& snap, const Graph& graph, std::span<const std::string> queries) {
    const auto hits = search_nodes(snap, graph.view, queries);
    std::set<std::string> blocks;
    for (const auto& b : graph.layout.blocks) {
        const bool hit = std::any_of(b.node_ids.begin(), b.node_ids.end(), [&](const std::string& id) {
            const auto idx = snap.dag().find(id);
            return idx && hits.count(*idx);
        });
        if (hit) blocks.insert(b.id);
    }
    return blocks;
}

}  // namespace githru::analytics
