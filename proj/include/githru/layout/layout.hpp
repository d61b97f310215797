#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "githru/time_util.hpp"

namespace githru::layout {

struct LayoutNode {
    std::string id;  // base commit id
    Timestamp date = 0;
    std::uint32_t topo_rank = 0;
    std::size_t commit_count = 1;
    bool csm_base = false;
    std::optional<std::string> release_tag;
};

struct LayoutCluster {
    std::string id;
    std::vector<std::size_t> members;  // positions into LayoutStem::nodes
};

/// A stem with its clusters, in display order (the main stem, if present,
/// flagged and given first).
struct LayoutStem {
    std::string name;
    bool is_main = false;
    std::vector<LayoutNode> nodes;
    std::vector<LayoutCluster> clusters;
};

struct Block {
    std::string id;  // "<cluster id>-<ordinal within cluster>"
    std::string cluster_id;
    std::string stem_name;
    std::size_t row = 0;
    std::size_t column = 0;
    std::size_t height = 0;  // commits, squash-merge sources included
    bool has_csm_base = false;
    std::optional<std::string> release_tag;
    std::vector<std::string> node_ids;
    std::size_t first_slot = 0;
    std::size_t last_slot = 0;
};

struct Strip {
    std::string stem_name;
    std::size_t row = 0;
    std::size_t first_column = 0;
    std::size_t last_column = 0;
};

struct ReleaseMarker {
    std::size_t column = 0;
    std::string version;
};

struct LayoutModel {
    std::vector<Block> blocks;  // sorted by column
    std::map<std::string, std::size_t> row_assignments;
    std::vector<std::pair<std::size_t, std::size_t>> intra_stem_edges;  // block indices
    std::vector<Strip> strips;
    std::vector<ReleaseMarker> release_markers;
    std::size_t column_count = 0;
    std::size_t row_count = 0;
};

/// Grid geometry for the given stems. Nodes take global time slots by date
/// (ties by topological rank, then id); within a stem the slots it owns are
/// handed out in cluster order. Maximal runs of consecutive slots inside one
/// cluster become blocks, each squeezed to its own column. The main stem
/// holds row 0; every other stem goes to the first row whose occupied
/// column intervals it does not intersect.
LayoutModel compute_layout(std::span<const LayoutStem> stems);

}  // namespace githru::layout
