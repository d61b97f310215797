#include "githru/analytics/graph.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include "githru/error.hpp"

namespace githru::analytics {

void GraphParams::validate() const {
    clustering.validate();
    if (from && to && *from > *to) throw Error(ErrorCode::InvalidRange, "from is after to");
    for (const auto& f : keyword_filters)
        if (f.text.empty()) throw Error(ErrorCode::EmptyKeyword, "keyword filter needs text");
}

std::string GraphParams::canonical_key() const {
    std::ostringstream key;
    char buf[256];
    const auto& w = clustering.weights;
    std::snprintf(buf, sizeof buf, "csm=%d;t=%.17g;w=%.17g,%.17g,%.17g,%.17g,%.17g;rs=%d;nc=%d;h=%d", csm ? 1 : 0,
                  clustering.threshold, w.author, w.date, w.type, w.file, w.message,
                  clustering.split_by_release ? 1 : 0, clustering.non_conflict ? 1 : 0,
                  clustering.date_horizon_days);
    key << buf;
    key << ";from=" << (from ? std::to_string(*from) : "-") << ";to=" << (to ? std::to_string(*to) : "-");
    key << ";types=";
    if (stem_types) {
        for (auto t : *stem_types) key << stemgraph::to_string(t) << ',';
    } else {
        key << '*';
    }
    for (const auto& f : keyword_filters)
        key << ";kw=" << to_string(f.criterion) << ':' << to_string(f.mode) << ':' << f.text.size() << ':' << f.text;
    return key.str();
}

std::optional<std::pair<std::size_t, std::size_t>> Graph::locate(const std::string& cluster_id) const {
    const auto it = index.find(cluster_id);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::cluster_count() const {
    std::size_t n = 0;
    for (const auto& c : clusters) n += c.size();
    return n;
}

std::vector<ViewNode> Graph::cluster_nodes(const std::string& cluster_id) const {
    const auto loc = locate(cluster_id);
    if (!loc) throw Error(ErrorCode::UnknownCluster, cluster_id);
    const auto& cluster = clusters[loc->first][loc->second];
    std::vector<ViewNode> out;
    for (std::size_t m : cluster.members) out.push_back(view.stems[loc->first].nodes[m]);
    return out;
}

View filtered_view(const AnalysisSnapshot& snap, const GraphParams& params) {
    View view = toggle_csm(snap, params.csm);
    if (params.stem_types) view = filter_stem_types(std::move(view), *params.stem_types);
    if (params.from || params.to) {
        view = filter_temporal(snap, std::move(view), params.from.value_or(std::numeric_limits<Timestamp>::min()),
                               params.to.value_or(std::numeric_limits<Timestamp>::max()));
    }
    for (const auto& f : params.keyword_filters)
        view = filter_keyword(snap, std::move(view), f.criterion, f.text, f.mode);
    return view;
}

std::vector<clustering::ClusterNode> clustering_nodes(const AnalysisSnapshot& snap, const ViewStem& stem) {
    std::vector<clustering::ClusterNode> nodes;
    nodes.reserve(stem.nodes.size());
    for (const auto& n : stem.nodes) {
        const auto& f = node_features(snap, n);
        nodes.push_back({snap.commit(n.base).id, f.aggregate, f.commit_count, f.cloc, f.type_counts, f.release_tag});
    }
    return nodes;
}

Graph cluster_and_layout(const AnalysisSnapshot& snap, View view, const clustering::ClusterParams& params) {
    params.validate();
    Graph g;
    std::vector<layout::LayoutStem> layout_stems;
    for (std::size_t s = 0; s < view.stems.size(); ++s) {
        const auto& stem = view.stems[s];
        const auto nodes = clustering_nodes(snap, stem);
        auto clusters = clustering::cluster_stem(stem.name, nodes, params);
        if (params.non_conflict) clusters = clustering::non_conflict_cluster(std::move(clusters), params);

        layout::LayoutStem ls;
        ls.name = stem.name;
        ls.is_main = stem.type == StemType::Main;
        for (const auto& n : stem.nodes) {
            ls.nodes.push_back({snap.commit(n.base).id, snap.commit(n.base).commit_date, snap.dag().topo_rank(n.base),
                                node_features(snap, n).commit_count, n.csm >= 0,
                                node_features(snap, n).release_tag});
        }
        for (std::size_t k = 0; k < clusters.size(); ++k) {
            ls.clusters.push_back({clusters[k].id, clusters[k].members});
            g.index[clusters[k].id] = {s, k};
        }
        layout_stems.push_back(std::move(ls));
        g.clusters.push_back(std::move(clusters));
    }
    g.layout = layout::compute_layout(layout_stems);
    g.layout_input = std::move(layout_stems);
    g.view = std::move(view);
    return g;
}

Graph compute_graph(const AnalysisSnapshot& snap, const GraphParams& params) {
    params.validate();
    return cluster_and_layout(snap, filtered_view(snap, params), params.clustering);
}

}  // namespace githru::analytics
