#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "githru/analytics/view.hpp"
#include "githru/clustering/clustering.hpp"
#include "githru/layout/layout.hpp"

namespace githru::analytics {

struct KeywordFilter {
    KeywordCriterion criterion = KeywordCriterion::Message;
    std::string text;
    FilterMode mode = FilterMode::Include;
};

/// Every knob of the stem-graph view. Filters compose conjunctively.
struct GraphParams {
    bool csm = true;
    clustering::ClusterParams clustering;
    std::optional<Timestamp> from;
    std::optional<Timestamp> to;
    std::optional<std::set<StemType>> stem_types;  // all when unset
    std::vector<KeywordFilter> keyword_filters;

    /// Throws Error(InvalidParams / InvalidRange / EmptyKeyword).
    void validate() const;

    /// Canonical serialization; equal keys mean equal views.
    std::string canonical_key() const;
};

struct Graph {
    View view;
    std::vector<std::vector<clustering::Cluster>> clusters;  // per view stem
    layout::LayoutModel layout;
    std::vector<layout::LayoutStem> layout_input;  // what the layout was computed from

    /// (stem index, cluster index) of a cluster id.
    std::optional<std::pair<std::size_t, std::size_t>> locate(const std::string& cluster_id) const;
    std::size_t cluster_count() const;

    /// Nodes of a cluster in member order. Throws Error(UnknownCluster).
    std::vector<ViewNode> cluster_nodes(const std::string& cluster_id) const;

    std::map<std::string, std::pair<std::size_t, std::size_t>> index;
};

/// Applies the filters to a view without clustering.
View filtered_view(const AnalysisSnapshot& snap, const GraphParams& params);

/// Clustering input for one stem.
std::vector<clustering::ClusterNode> clustering_nodes(const AnalysisSnapshot& snap, const ViewStem& stem);

/// Clusters every stem of a view and lays the result out.
Graph cluster_and_layout(const AnalysisSnapshot& snap, View view, const clustering::ClusterParams& params);

Graph compute_graph(const AnalysisSnapshot& snap, const GraphParams& params);

}  // namespace githru::analytics
