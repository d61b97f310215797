#include "githru/analytics/summary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "githru/error.hpp"

namespace githru::analytics {

std::uint64_t Contribution::cloc() const {
    std::uint64_t total = 0;
    if (files)
        for (const auto& fc : *files) total += fc.cloc();
    return total;
}

std::vector<Contribution> contributions(const AnalysisSnapshot& snap, std::span<const ViewNode> nodes) {
    std::vector<Contribution> out;
    for (const auto& n : nodes) {
        out.push_back({n.base, &snap.commit(n.base).file_changes, &snap.commit(n.base).keywords});
        if (n.csm >= 0)
            for (CommitIndex s : snap.csm().nodes[n.csm].sources) out.push_back({s, nullptr, &snap.commit(s).keywords});
    }
    return out;
}

std::string directory_of(std::string_view path) {
    const std::size_t slash = path.rfind('/');
    if (slash == std::string_view::npos || slash == 0) return "/";
    return std::string(path.substr(0, slash));
}

std::vector<LabelValue> top_k(const std::map<std::string, double>& values, std::size_t k) {
    std::vector<LabelValue> out;
    for (const auto& [label, v] : values) out.push_back({label, v});
    std::stable_sort(out.begin(), out.end(), [](const LabelValue& a, const LabelValue& b) { return a.value > b.value; });
    if (out.size() > k) out.resize(k);
    return out;
}

std::vector<SummaryColumn> grouped_summary(const AnalysisSnapshot& snap, const Graph& graph,
                                           std::span<const std::string> cluster_ids, bool by_cloc) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> ordered;
    std::set<std::string> seen;
    for (const auto& id : cluster_ids) {
        const auto loc = graph.locate(id);
        if (!loc) throw Error(ErrorCode::UnknownCluster, id);
        if (seen.insert(id).second) ordered.push_back({*loc, id});
    }
    std::sort(ordered.begin(), ordered.end());

    std::vector<SummaryColumn> columns;
    for (const auto& [loc, id] : ordered) {
        const auto nodes = graph.cluster_nodes(id);
        const auto contribs = contributions(snap, nodes);

        std::map<std::string, double> authors, types, files, dirs, keywords;
        double cloc = 0.0;
        for (const auto& c : contribs) {
            const auto& rec = snap.commit(c.commit);
            authors[rec.author_name] += 1;
            types[std::string(ingest::to_string(rec.commit_type))] += 1;
            cloc += static_cast<double>(c.cloc());
            if (c.files) {
                std::set<std::string> touched_dirs;
                for (const auto& fc : *c.files) {
                    files[fc.path] += by_cloc ? static_cast<double>(fc.cloc()) : 1.0;
                    touched_dirs.insert(directory_of(fc.path));
                }
                for (const auto& d : touched_dirs) dirs[d] += 1;
            }
            for (const auto& kw : *c.keywords) keywords[kw.token] += 1;
        }

        SummaryColumn col;
        col.cluster_id = id;
        col.width_weight = by_cloc ? cloc : static_cast<double>(contribs.size());
        col.top_authors = top_k(authors, kSummaryTopK);
        col.top_types = top_k(types, kSummaryTopK);
        col.top_files = top_k(files, kSummaryTopK);
        col.top_dirs = top_k(dirs, kSummaryTopK);
        col.top_keywords = top_k(keywords, kSummaryTopK);
        columns.push_back(std::move(col));
    }
    return columns;
}

namespace {

DetailRow row_for(const AnalysisSnapshot& snap, CommitIndex c) {
    const auto& rec = snap.commit(c);
    return {rec.id, rec.author_name, rec.commit_date, rec.message, std::string(ingest::to_string(rec.commit_type)),
            rec.cloc(), {}, {}};
}

struct IcicleBuilder {
    IcicleNode node;
    std::map<std::string, IcicleBuilder> children;
    std::set<CommitIndex> commits;
    std::map<std::string, int> author_commits;

    IcicleNode finish() {
        IcicleNode out;
        out.name = node.name;
        out.cloc = node.cloc;
        out.commit_count = commits.size();
        if (!author_commits.empty()) {
            auto best = author_commits.begin();
            for (auto it = author_commits.begin(); it != author_commits.end(); ++it)
                if (it->second > best->second) best = it;
            out.top_author = best->first;
        }
        std::uint64_t child_cloc = 0;
        for (auto& [name, child] : children) {
            out.children.push_back(child.finish());
            child_cloc += out.children.back().cloc;
        }
        if (!children.empty()) out.cloc = child_cloc;
        return out;
    }
};

}  // namespace

IcicleNode build_icicle(const AnalysisSnapshot& snap, std::span<const Contribution> contribs) {
    IcicleBuilder root;
    for (const auto& c : contribs) {
        if (!c.files) continue;
        const auto& author = snap.commit(c.commit).author_name;
        for (const auto& fc : *c.files) {
            IcicleBuilder* cur = &root;
            auto touch = [&](IcicleBuilder& b) {
                if (b.commits.insert(c.commit).second) ++b.author_commits[author];
            };
            touch(root);
            std::string_view rest = fc.path;
            while (!rest.empty()) {
                const std::size_t slash = rest.find('/');
                const std::string segment(rest.substr(0, slash));
                rest = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
                if (segment.empty()) continue;
                IcicleBuilder& child = cur->children[segment];
                child.node.name = segment;
                touch(child);
                cur = &child;
            }
            cur->node.cloc += fc.cloc();
        }
    }
    return root.finish();
}

ClusterDetail cluster_detail(const AnalysisSnapshot& snap, const Graph& graph, const std::string& cluster_id) {
    auto nodes = graph.cluster_nodes(cluster_id);
    std::sort(nodes.begin(), nodes.end(),
              [&](const ViewNode& a, const ViewNode& b) { return snap.dag().earlier(a.base, b.base); });

    ClusterDetail detail;
    detail.cluster_id = cluster_id;
    for (const auto& n : nodes) {
        DetailRow row = row_for(snap, n.base);
        if (n.csm >= 0) {
            const auto& fused = snap.csm().nodes[n.csm];
            row.pr_refs = fused.pr_refs;
            for (CommitIndex s : fused.sources) row.sources.push_back(row_for(snap, s));
        }
        detail.rows.push_back(std::move(row));
    }
    const auto contribs = contributions(snap, nodes);
    detail.icicle = build_icicle(snap, contribs);
    return detail;
}

}  // namespace githru::analytics
