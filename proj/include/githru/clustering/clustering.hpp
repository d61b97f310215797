#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "githru/clustering/similarity.hpp"
#include "githru/ingest/commit.hpp"

namespace githru::clustering {

struct ClusterParams {
    double threshold = 0.5;  // maximum difference (1 - similarity) allowed inside a cluster
    SimilarityWeights weights;
    bool split_by_release = false;
    bool non_conflict = false;
    int date_horizon_days = kDefaultDateHorizonDays;

    /// Throws Error(InvalidParams).
    void validate() const;
};

/// One stem node (plain commit or squash-merged node) as clustering sees it.
struct ClusterNode {
    std::string id;  // base commit id
    Aggregate features;
    std::size_t commit_count = 1;
    std::uint64_t cloc = 0;
    std::array<int, ingest::kCommitTypeCount> type_counts{};
    std::optional<std::string> release_tag;
};

struct Cluster {
    std::string id;
    std::string stem_name;
    std::vector<std::size_t> members;  // node positions within the stem
    Aggregate aggregate;
    std::size_t commit_count = 0;
    std::uint64_t cloc = 0;
    std::array<int, ingest::kCommitTypeCount> type_counts{};
    std::optional<std::string> release_tag;
};

/// Stable identifier derived from the stem name and first member id.
std::string cluster_id(std::string_view stem_name, std::string_view first_member_id);

/// Single left-to-right pass: a node joins the open cluster when its
/// difference from the cluster aggregate is within the threshold and, under
/// release split, the cluster has not been closed by a release tag.
std::vector<Cluster> cluster_stem(std::string_view stem_name, std::span<const ClusterNode> nodes,
                                  const ClusterParams& params);

/// One greedy pass folding each later, similar, non-neighbor cluster into
/// an earlier anchor when neither the anchor nor the candidate shares a file
/// with any cluster in between. Relative order of untouched clusters is kept.
std::vector<Cluster> non_conflict_cluster(std::vector<Cluster> clusters, const ClusterParams& params);

}  // namespace githru::clustering
