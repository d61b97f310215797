#pragma once

#include <set>
#include <span>
#include <string>

#include "githru/analytics/graph.hpp"

namespace githru::analytics {

/// Base commits of the nodes matching any query (case-insensitive
/// substring over branch names, tags, messages, authors, commit ids and
/// modified files). Throws Error(EmptyQuery).
std::set<CommitIndex> search_nodes(const AnalysisSnapshot& snap, const View& view, std::span<const std::string> queries);

/// Ids of blocks holding a matching node. The graph is not modified.
std::set<std::string> search(const AnalysisSnapshot& snap, const Graph& graph, std::span<const std::string> queries);

}  // namespace githru::analytics
