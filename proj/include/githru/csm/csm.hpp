#pragma once

#include <array>
#include <string>
#include <vector>

#include "githru/ingest/commit.hpp"
#include "githru/ingest/keywords.hpp"
#include "githru/ingest/pull_request.hpp"
#include "githru/stemgraph/dag.hpp"
#include "githru/stemgraph/stems.hpp"

namespace githru::csm {

using stemgraph::CommitIndex;

/// A merge commit fused with the commits it brought in from other stems.
struct CsmNode {
    CommitIndex base = 0;
    std::vector<CommitIndex> sources;  // ancestor first, per non-first parent in parent order
    std::vector<std::string> coauthors;  // sorted, unique, base author excluded
    std::string fused_message;
    std::vector<ingest::KeywordCount> fused_keywords;
    std::array<int, ingest::kCommitTypeCount> type_counts{};  // base + sources
    std::vector<int> pr_refs;

    /// Base plus sources.
    std::size_t commit_count() const noexcept { return 1 + sources.size(); }
};

struct CsmResult {
    std::vector<stemgraph::Stem> stems;  // consumed commits removed, empty stems dropped, ordered
    std::vector<CsmNode> nodes;
    std::vector<int> node_of_base;  // per commit: index into nodes, or -1
    std::vector<int> consumed_by;   // per commit: index of the consuming node, or -1
};

struct StemLocator {
    std::vector<int> stem_of;            // per commit, -1 when unassigned
    std::vector<std::size_t> position;   // index within its stem
};

StemLocator locate(const std::vector<stemgraph::Stem>& stems, std::size_t commit_count);

/// For each non-first parent p of `merge`, the run of p's stem that ends at
/// p and reaches back to the first unavailable commit. Parents on the
/// merge's own stem or on the main stem contribute nothing.
///
/// Throws Error(NotAMerge) when `merge` has fewer than two parents.
std::vector<CommitIndex> csm_sources(const stemgraph::CommitDag& dag, const std::vector<stemgraph::Stem>& stems,
                                     const StemLocator& locator, CommitIndex merge,
                                     const std::vector<bool>& unavailable);

/// Main-stem merges first in date order, then the remaining stems by
/// recency. Earlier bases win shared sources.
CsmResult apply_csm(const std::vector<stemgraph::Stem>& stems, const stemgraph::CommitDag& dag,
                    const ingest::PrLinks& pr_links, const std::vector<ingest::PullRequest>& prs,
                    const ingest::StopWords& stop_words = ingest::StopWords::english());

}  // namespace githru::csm
