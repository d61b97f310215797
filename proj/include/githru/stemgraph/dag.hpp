#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "githru/ingest/commit.hpp"
#include "githru/ingest/pull_request.hpp"

namespace githru::stemgraph {

using CommitIndex = std::uint32_t;

enum class RefKind : std::uint8_t { Branch, Tag, PrHead };

struct HeadRef {
    std::string name;
    std::string commit_id;
    RefKind kind = RefKind::Branch;
    std::optional<ingest::PrState> pr_state;  // PrHead only
};

struct DagOptions {
    /// Drop parents that are not in the commit list instead of failing;
    /// the affected commits are reported as the shallow boundary.
    bool allow_shallow = false;
};

/// Immutable commit graph. Commits are addressed by their index in the
/// vector the DAG was built from.
class CommitDag {
public:
    /// Throws Error(DanglingParent) or Error(CycleDetected).
    static CommitDag build(std::vector<ingest::CommitRecord> commits, std::vector<HeadRef> heads,
                           DagOptions options = {});

    std::size_t size() const noexcept { return commits_.size(); }
    const ingest::CommitRecord& commit(CommitIndex i) const { return commits_[i]; }
    const std::vector<ingest::CommitRecord>& commits() const noexcept { return commits_; }
    const std::string& id(CommitIndex i) const { return commits_[i].id; }
    std::optional<CommitIndex> find(std::string_view id) const;

    std::span<const CommitIndex> parents(CommitIndex i) const { return parents_[i]; }
    std::span<const CommitIndex> children(CommitIndex i) const { return children_[i]; }
    std::optional<CommitIndex> first_parent(CommitIndex i) const {
        if (parents_[i].empty()) return std::nullopt;
        return parents_[i].front();
    }

    /// Position in a deterministic topological order (parents first; ready
    /// commits taken by commit date, then id).
    std::uint32_t topo_rank(CommitIndex i) const { return topo_rank_[i]; }

    /// Strict order used for time slots: commit date, then topological rank.
    bool earlier(CommitIndex a, CommitIndex b) const {
        const auto da = commits_[a].commit_date, db = commits_[b].commit_date;
        if (da != db) return da < db;
        return topo_rank_[a] < topo_rank_[b];
    }

    const std::vector<HeadRef>& heads() const noexcept { return heads_; }
    const std::vector<std::string>& shallow_boundary() const noexcept { return shallow_; }

private:
    std::vector<ingest::CommitRecord> commits_;
    std::unordered_map<std::string, CommitIndex> index_;
    std::vector<std::vector<CommitIndex>> parents_;
    std::vector<std::vector<CommitIndex>> children_;
    std::vector<std::uint32_t> topo_rank_;
    std::vector<HeadRef> heads_;
    std::vector<std::string> shallow_;
};

/// Branch and tag heads from the log decoration plus PR heads.
std::vector<HeadRef> collect_heads(const std::vector<ingest::CommitRecord>& commits,
                                   const ingest::PrLinks& pr_links);

}  // namespace githru::stemgraph
