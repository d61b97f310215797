#include "githru/service/serialize.hpp"

#include <map>

namespace githru::service {
namespace {

json optional_text(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

json label_values(const std::vector<analytics::LabelValue>& list) {
    json out = json::array();
    for (const auto& lv : list) out.push_back({{"label", lv.label}, {"value", lv.value}});
    return out;
}

json diff_sets(const analytics::DiffSets& sets, bool with_size) {
    auto entries = [&](const std::vector<analytics::DiffEntry>& list) {
        json out = json::array();
        for (const auto& e : list) {
            json j = {{"label", e.label}, {"valueA", e.value_a}, {"valueB", e.value_b}};
            if (with_size) j["size"] = e.size;
            out.push_back(std::move(j));
        }
        return out;
    };
    return {{"intersection", entries(sets.intersection)},
            {"onlyA", entries(sets.only_a)},
            {"onlyB", entries(sets.only_b)}};
}

json detail_row(const analytics::DetailRow& row) {
    json sources = json::array();
    for (const auto& s : row.sources) sources.push_back(detail_row(s));
    return {{"id", row.commit_id}, {"author", row.author}, {"date", row.date},   {"message", row.message},
            {"type", row.type},    {"cloc", row.cloc},     {"prRefs", row.pr_refs}, {"sources", sources}};
}

}  // namespace

json graph_to_json(const AnalysisSnapshot& snap, const analytics::Graph& graph) {
    const auto& view = graph.view;
    const auto& dag = snap.dag();

    json stems = json::array();
    json clusters = json::array();
    json csm_nodes = json::array();
    for (std::size_t s = 0; s < view.stems.size(); ++s) {
        const auto& stem = view.stems[s];
        json node_ids = json::array();
        for (const auto& n : stem.nodes) {
            node_ids.push_back(dag.id(n.base));
            if (n.csm < 0) continue;
            const auto& fused = snap.csm().nodes[n.csm];
            json sources = json::array();
            for (CommitIndex c : fused.sources) sources.push_back(dag.id(c));
            csm_nodes.push_back({{"base", dag.id(fused.base)},
                                 {"sources", sources},
                                 {"coauthors", fused.coauthors},
                                 {"prRefs", fused.pr_refs},
                                 {"commitCount", fused.commit_count()}});
        }
        const auto row = graph.layout.row_assignments.find(stem.name);
        stems.push_back({{"name", stem.name},
                         {"type", std::string(stemgraph::to_string(stem.type))},
                         {"row", row == graph.layout.row_assignments.end() ? json(nullptr) : json(row->second)},
                         {"nodes", node_ids}});

        for (const auto& c : graph.clusters[s]) {
            json members = json::array();
            for (std::size_t m : c.members) members.push_back(dag.id(stem.nodes[m].base));
            json authors = json::array();
            for (auto a : c.aggregate.authors) authors.push_back(snap.authors().label(a));
            json types = json::object();
            for (std::size_t t = 0; t < c.type_counts.size(); ++t)
                if (c.type_counts[t] > 0)
                    types[std::string(ingest::to_string(static_cast<ingest::CommitType>(t)))] = c.type_counts[t];
            clusters.push_back({{"id", c.id},
                                {"stem", c.stem_name},
                                {"members", members},
                                {"commitCount", c.commit_count},
                                {"cloc", c.cloc},
                                {"authors", authors},
                                {"types", types},
                                {"fileCount", c.aggregate.files.size()},
                                {"dateRange", json::array({c.aggregate.first_date, c.aggregate.last_date})},
                                {"releaseTag", optional_text(c.release_tag)}});
        }
    }

    json csm_edges = json::array();
    for (const auto& [base, source] : view.csm_edges) csm_edges.push_back(json::array({dag.id(base), dag.id(source)}));

    const auto& lm = graph.layout;
    json blocks = json::array();
    for (const auto& b : lm.blocks) {
        blocks.push_back({{"id", b.id},
                          {"cluster", b.cluster_id},
                          {"stem", b.stem_name},
                          {"row", b.row},
                          {"column", b.column},
                          {"height", b.height},
                          {"hasCsmBase", b.has_csm_base},
                          {"releaseTag", optional_text(b.release_tag)},
                          {"nodes", b.node_ids}});
    }
    json edges = json::array();
    for (const auto& [a, b] : lm.intra_stem_edges) edges.push_back(json::array({lm.blocks[a].id, lm.blocks[b].id}));
    json strips = json::array();
    for (const auto& s : lm.strips)
        strips.push_back({{"stem", s.stem_name}, {"row", s.row}, {"firstColumn", s.first_column}, {"lastColumn", s.last_column}});
    json markers = json::array();
    for (const auto& m : lm.release_markers) markers.push_back({{"column", m.column}, {"version", m.version}});
    json rows = json::object();
    for (const auto& [name, row] : lm.row_assignments) rows[name] = row;

    json releases = json::array();
    for (const auto& r : snap.releases())
        releases.push_back({{"version", r.version}, {"tag", r.tag}, {"commit", r.commit_id}, {"date", r.date}});

    return {{"csm", view.csm_enabled},
            {"stems", stems},
            {"clusters", clusters},
            {"csmNodes", csm_nodes},
            {"csmEdges", csm_edges},
            {"layout",
             {{"columnCount", lm.column_count},
              {"rowCount", lm.row_count},
              {"blocks", blocks},
              {"rows", rows},
              {"intraStemEdges", edges},
              {"strips", strips},
              {"releaseMarkers", markers}}},
            {"releases", releases}};
}

json summary_to_json(const std::vector<analytics::SummaryColumn>& columns) {
    json out = json::array();
    for (const auto& c : columns) {
        out.push_back({{"clusterId", c.cluster_id},
                       {"widthWeight", c.width_weight},
                       {"topAuthors", label_values(c.top_authors)},
                       {"topTypes", label_values(c.top_types)},
                       {"topFiles", label_values(c.top_files)},
                       {"topDirs", label_values(c.top_dirs)},
                       {"topKeywords", label_values(c.top_keywords)}});
    }
    return out;
}

json icicle_to_json(const analytics::IcicleNode& node) {
    json children = json::array();
    for (const auto& c : node.children) children.push_back(icicle_to_json(c));
    return {{"name", node.name},
            {"cloc", node.cloc},
            {"commitCount", node.commit_count},
            {"topAuthor", optional_text(node.top_author)},
            {"children", children}};
}

json detail_to_json(const analytics::ClusterDetail& detail) {
    json rows = json::array();
    for (const auto& r : detail.rows) rows.push_back(detail_row(r));
    return {{"clusterId", detail.cluster_id}, {"rows", rows}, {"icicle", icicle_to_json(detail.icicle)}};
}

json diff_to_json(const analytics::DiffResult& diff) {
    return {{"metric", std::string(analytics::to_string(diff.metric))},
            {"authors", diff_sets(diff.authors, false)},
            {"types", diff_sets(diff.types, false)},
            {"files", diff_sets(diff.files, false)},
            {"keywords", diff_sets(diff.keywords, true)}};
}

json timeline_json(const AnalysisSnapshot& snap) {
    std::map<Timestamp, std::pair<std::size_t, std::uint64_t>> days;
    for (const auto& c : snap.dag().commits()) {
        auto& d = days[floor_day(c.commit_date)];
        ++d.first;
        d.second += c.cloc();
    }
    json series = json::array();
    for (const auto& [day, v] : days)
        series.push_back({{"date", format_day(day)}, {"day", day}, {"commitCount", v.first}, {"cloc", v.second}});
    json releases = json::array();
    for (const auto& r : snap.releases())
        releases.push_back({{"version", r.version}, {"date", r.date}, {"day", format_day(r.date)}, {"commit", r.commit_id}});
    return {{"days", series}, {"releases", releases}};
}

}  // namespace githru::service
