#include "githru/analytics/compare.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "githru/analytics/summary.hpp"
#include "githru/error.hpp"

namespace githru::analytics {

std::string_view to_string(Metric m) noexcept { return m == Metric::Cloc ? "cloc" : "commitCount"; }

std::optional<Metric> parse_metric(std::string_view text) noexcept {
    if (text == "commitCount" || text == "commits") return Metric::CommitCount;
    if (text == "cloc") return Metric::Cloc;
    return std::nullopt;
}

Selection capture_selection(const Graph& graph, std::string id, std::string name,
                            std::vector<std::string> cluster_ids, Timestamp captured_at) {
    if (cluster_ids.empty()) throw Error(ErrorCode::EmptySelection, "selection needs at least one cluster");
    Selection sel;
    sel.id = std::move(id);
    sel.name = std::move(name);
    sel.captured_at = captured_at;
    for (const auto& cid : cluster_ids) {
        auto nodes = graph.cluster_nodes(cid);
        sel.nodes.insert(sel.nodes.end(), nodes.begin(), nodes.end());
    }
    sel.cluster_ids = std::move(cluster_ids);
    return sel;
}

DiffSets partition(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
    DiffSets out;
    for (const auto& [label, va] : a) {
        const auto it = b.find(label);
        if (it == b.end())
            out.only_a.push_back({label, va, 0.0, 0.0});
        else
            out.intersection.push_back({label, va, it->second, 0.0});
    }
    for (const auto& [label, vb] : b)
        if (!a.count(label)) out.only_b.push_back({label, 0.0, vb, 0.0});
    return out;
}

namespace {

struct SideStats {
    std::map<std::string, double> authors, types, files, keywords;
};

std::map<std::string, double> truncate(const std::map<std::string, double>& values, std::size_t k) {
    std::map<std::string, double> out;
    for (const auto& lv : top_k(values, k)) out.emplace(lv.label, lv.value);
    return out;
}

SideStats side_stats(const AnalysisSnapshot& snap, const Selection& sel, Metric metric) {
    SideStats st;
    for (const auto& c : contributions(snap, sel.nodes)) {
        const auto& rec = snap.commit(c.commit);
        const double v = metric == Metric::Cloc ? static_cast<double>(c.cloc()) : 1.0;
        st.authors[rec.author_name] += v;
        st.types[std::string(ingest::to_string(rec.commit_type))] += v;
        if (c.files)
            for (const auto& fc : *c.files) st.files[fc.path] += metric == Metric::Cloc ? fc.cloc() : 1.0;
    }
    // Mean TF-IDF vector over the selected nodes.
    std::map<std::string, double> sum;
    for (const auto& n : sel.nodes)
        for (const auto& [term, w] : node_features(snap, n).aggregate.keywords) sum[snap.terms().label(term)] += w;
    for (auto& [token, w] : sum) w /= static_cast<double>(sel.nodes.size());
    st.keywords = truncate(sum, kDiffTopKeywords);
    st.files = truncate(st.files, kDiffTopFiles);
    return st;
}

void normalize_sizes(DiffSets& sets) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    auto weight = [](const DiffEntry& e) { return std::max(e.value_a, e.value_b); };
    for (auto* group : {&sets.intersection, &sets.only_a, &sets.only_b})
        for (const auto& e : *group) {
            lo = std::min(lo, weight(e));
            hi = std::max(hi, weight(e));
        }
    for (auto* group : {&sets.intersection, &sets.only_a, &sets.only_b})
        for (auto& e : *group) e.size = hi > lo ? (weight(e) - lo) / (hi - lo) : 1.0;
}

}  // namespace

DiffResult compare(const AnalysisSnapshot& snap, const Selection& a, const Selection& b, Metric metric) {
    if (a.nodes.empty() || b.nodes.empty()) throw Error(ErrorCode::EmptySelection, "cannot compare an empty selection");
    const SideStats sa = side_stats(snap, a, metric);
    const SideStats sb = side_stats(snap, b, metric);
    DiffResult r;
    r.metric = metric;
    r.authors = partition(sa.authors, sb.authors);
    r.types = partition(sa.types, sb.types);
    r.files = partition(sa.files, sb.files);
    r.keywords = partition(sa.keywords, sb.keywords);
    normalize_sizes(r.keywords);
    return r;
}

}  // namespace githru::analytics
