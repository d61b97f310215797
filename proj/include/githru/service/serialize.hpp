#pragma once

#include "githru/analytics/compare.hpp"
#include "githru/analytics/graph.hpp"
#include "githru/analytics/summary.hpp"
#include "githru/snapshot.hpp"
#include "json.hpp"

namespace githru::service {

using nlohmann::json;

/// {stems, clusters, csmNodes, csmEdges, layout, releases}
json graph_to_json(const AnalysisSnapshot& snap, const analytics::Graph& graph);
json summary_to_json(const std::vector<analytics::SummaryColumn>& columns);
json detail_to_json(const analytics::ClusterDetail& detail);
json diff_to_json(const analytics::DiffResult& diff);
json icicle_to_json(const analytics::IcicleNode& node);

/// Per-day commit counts and CLOC over the whole history, plus release dates.
json timeline_json(const AnalysisSnapshot& snap);

}  // namespace githru::service
