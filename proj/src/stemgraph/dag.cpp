#include "githru/stemgraph/dag.hpp"

#include <queue>
#include <tuple>

#include "githru/error.hpp"

namespace githru::stemgraph {

CommitDag CommitDag::build(std::vector<ingest::CommitRecord> commits, std::vector<HeadRef> heads,
                           DagOptions options) {
    CommitDag dag;
    dag.commits_ = std::move(commits);
    const std::size_t n = dag.commits_.size();
    dag.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!dag.index_.emplace(dag.commits_[i].id, static_cast<CommitIndex>(i)).second)
            throw Error(ErrorCode::MalformedRecord, "duplicate commit id " + dag.commits_[i].id);
    }

    dag.parents_.resize(n);
    dag.children_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& rec = dag.commits_[i];
        std::vector<std::string> kept;
        for (const auto& p : rec.parents) {
            const auto it = dag.index_.find(p);
            if (it == dag.index_.end()) {
                if (!options.allow_shallow)
                    throw Error(ErrorCode::DanglingParent, rec.id + " references unknown parent " + p);
                continue;
            }
            kept.push_back(p);
            dag.parents_[i].push_back(it->second);
            dag.children_[it->second].push_back(static_cast<CommitIndex>(i));
        }
        if (kept.size() != rec.parents.size()) {
            dag.shallow_.push_back(rec.id);
            rec.parents = std::move(kept);
        }
    }

    // Kahn's algorithm; ready commits leave by (commit date, id).
    std::vector<std::size_t> pending(n);
    using Key = std::tuple<Timestamp, const std::string*, CommitIndex>;
    auto later = [](const Key& a, const Key& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return *std::get<1>(a) > *std::get<1>(b);
    };
    std::priority_queue<Key, std::vector<Key>, decltype(later)> ready(later);
    for (std::size_t i = 0; i < n; ++i) {
        pending[i] = dag.parents_[i].size();
        if (pending[i] == 0)
            ready.emplace(dag.commits_[i].commit_date, &dag.commits_[i].id, static_cast<CommitIndex>(i));
    }
    dag.topo_rank_.assign(n, 0);
    std::uint32_t rank = 0;
    while (!ready.empty()) {
        const CommitIndex c = std::get<2>(ready.top());
        ready.pop();
        dag.topo_rank_[c] = rank++;
        for (CommitIndex ch : dag.children_[c]) {
            // A commit listing the same parent twice appears twice here.
            if (--pending[ch] == 0) ready.emplace(dag.commits_[ch].commit_date, &dag.commits_[ch].id, ch);
        }
    }
    if (rank != n) throw Error(ErrorCode::CycleDetected, std::to_string(n - rank) + " commits lie on a cycle");

    for (auto& h : heads) {
        if (dag.index_.count(h.commit_id)) dag.heads_.push_back(std::move(h));
    }
    return dag;
}

std::optional<CommitIndex> CommitDag::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<HeadRef> collect_heads(const std::vector<ingest::CommitRecord>& commits,
                                   const ingest::PrLinks& pr_links) {
    std::vector<HeadRef> heads;
    for (const auto& c : commits) {
        for (const auto& b : c.branch_heads) heads.push_back({b, c.id, RefKind::Branch, std::nullopt});
        for (const auto& t : c.tags) heads.push_back({t, c.id, RefKind::Tag, std::nullopt});
    }
    for (const auto& pr : pr_links.heads)
        heads.push_back({"pr-" + std::to_string(pr.number), pr.commit_id, RefKind::PrHead, pr.state});
    return heads;
}

}  // namespace githru::stemgraph
