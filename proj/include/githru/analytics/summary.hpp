#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "githru/analytics/graph.hpp"

namespace githru::analytics {

inline constexpr std::size_t kSummaryTopK = 3;

struct LabelValue {
    std::string label;
    double value = 0.0;

    bool operator==(const LabelValue&) const = default;
};

struct SummaryColumn {
    std::string cluster_id;
    double width_weight = 0.0;  // commit count, or CLOC when summarizing by CLOC
    std::vector<LabelValue> top_authors;
    std::vector<LabelValue> top_types;
    std::vector<LabelValue> top_files;
    std::vector<LabelValue> top_dirs;
    std::vector<LabelValue> top_keywords;
};

/// A commit's share of a node: its author and type, and the node's file
/// changes for the base commit only (sources keep no files of their own).
struct Contribution {
    CommitIndex commit = 0;
    const std::vector<ingest::FileChange>* files = nullptr;  // null for squash-merge sources
    const std::vector<ingest::KeywordCount>* keywords = nullptr;

    std::uint64_t cloc() const;
};

std::vector<Contribution> contributions(const AnalysisSnapshot& snap, std::span<const ViewNode> nodes);

/// Directory part of a path; "/" for top-level files.
std::string directory_of(std::string_view path);

/// Highest values first, ties by label; at most `k` entries.
std::vector<LabelValue> top_k(const std::map<std::string, double>& values, std::size_t k);

/// One column per cluster in stem order. Throws Error(UnknownCluster).
std::vector<SummaryColumn> grouped_summary(const AnalysisSnapshot& snap, const Graph& graph,
                                           std::span<const std::string> cluster_ids, bool by_cloc);

struct DetailRow {
    std::string commit_id;
    std::string author;
    Timestamp date = 0;
    std::string message;
    std::string type;
    std::uint64_t cloc = 0;
    std::vector<int> pr_refs;
    std::vector<DetailRow> sources;  // expandable squash-merge sources
};

struct IcicleNode {
    std::string name;
    std::vector<IcicleNode> children;  // by name
    std::uint64_t cloc = 0;
    std::size_t commit_count = 0;
    std::optional<std::string> top_author;
};

struct ClusterDetail {
    std::string cluster_id;
    std::vector<DetailRow> rows;  // date ascending
    IcicleNode icicle;
};

IcicleNode build_icicle(const AnalysisSnapshot& snap, std::span<const Contribution> contributions);

/// Throws Error(UnknownCluster).
ClusterDetail cluster_detail(const AnalysisSnapshot& snap, const Graph& graph, const std::string& cluster_id);

}  // namespace githru::analytics
