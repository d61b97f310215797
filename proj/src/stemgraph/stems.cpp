#include "githru/stemgraph/stems.hpp"

#include <algorithm>
#include <numeric>

#include "githru/error.hpp"

namespace githru::stemgraph {

std::string_view to_string(StemType type) noexcept {
    switch (type) {
        case StemType::Main: return "main";
        case StemType::Explicit: return "explicit";
        case StemType::Implicit: return "implicit";
        case StemType::PrOpen: return "pr-open";
        case StemType::PrMerged: return "pr-merged";
        case StemType::PrClosed: return "pr-closed";
    }
    return "implicit";
}

std::optional<StemType> parse_stem_type(std::string_view text) noexcept {
    for (std::size_t i = 0; i < kStemTypeCount; ++i) {
        const auto t = static_cast<StemType>(i);
        if (to_string(t) == text) return t;
    }
    return std::nullopt;
}

namespace {

StemType pr_stem_type(ingest::PrState state) {
    switch (state) {
        case ingest::PrState::Open: return StemType::PrOpen;
        case ingest::PrState::Merged: return StemType::PrMerged;
        case ingest::PrState::Closed: return StemType::PrClosed;
    }
    return StemType::PrOpen;
}

class Claimer {
public:
    explicit Claimer(const CommitDag& dag) : dag_(dag), claimed_(dag.size(), false) {}

    bool claimed(CommitIndex c) const { return claimed_[c]; }

    /// Claims the first-parent chain of unclaimed commits ending at `head`.
    std::vector<CommitIndex> claim_chain(CommitIndex head) {
        std::vector<CommitIndex> chain;
        std::optional<CommitIndex> cur = head;
        while (cur && !claimed_[*cur]) {
            claimed_[*cur] = true;
            chain.push_back(*cur);
            cur = dag_.first_parent(*cur);
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

private:
    const CommitDag& dag_;
    std::vector<bool> claimed_;
};

const HeadRef* find_main(const CommitDag& dag, std::string_view main_branch) {
    const HeadRef* fallback = nullptr;
    const std::string suffix = "/" + std::string(main_branch);
    for (const auto& h : dag.heads()) {
        if (h.kind != RefKind::Branch) continue;
        if (h.name == main_branch) return &h;
        if (h.name.ends_with(suffix) && (!fallback || h.name < fallback->name)) fallback = &h;
    }
    return fallback;
}

}  // namespace

std::vector<Stem> build_stems(const CommitDag& dag, std::string_view main_branch) {
    const HeadRef* main = find_main(dag, main_branch);
    if (!main) throw Error(ErrorCode::UnknownMainBranch, "no branch named " + std::string(main_branch));

    Claimer claimer(dag);
    std::vector<Stem> stems;
    const CommitIndex main_head = *dag.find(main->commit_id);
    stems.push_back({std::string(main_branch), StemType::Main, claimer.claim_chain(main_head)});

    struct Candidate {
        const HeadRef* ref;
        CommitIndex head;
    };
    std::vector<Candidate> branches, prs;
    for (const auto& h : dag.heads()) {
        if (&h == main) continue;
        const Candidate cand{&h, *dag.find(h.commit_id)};
        if (h.kind == RefKind::Branch) branches.push_back(cand);
        if (h.kind == RefKind::PrHead) prs.push_back(cand);
    }
    auto by_recency = [&](const Candidate& a, const Candidate& b) {
        const auto da = dag.commit(a.head).commit_date, db = dag.commit(b.head).commit_date;
        if (da != db) return da > db;
        return a.ref->name < b.ref->name;
    };
    std::sort(branches.begin(), branches.end(), by_recency);
    std::sort(prs.begin(), prs.end(), by_recency);

    for (const auto& c : branches) {
        auto chain = claimer.claim_chain(c.head);
        if (!chain.empty()) stems.push_back({c.ref->name, StemType::Explicit, std::move(chain)});
    }
    for (const auto& c : prs) {
        auto chain = claimer.claim_chain(c.head);
        if (!chain.empty()) stems.push_back({c.ref->name, pr_stem_type(*c.ref->pr_state), std::move(chain)});
    }

    std::vector<CommitIndex> scan(dag.size());
    std::iota(scan.begin(), scan.end(), CommitIndex{0});
    std::sort(scan.begin(), scan.end(), [&](CommitIndex a, CommitIndex b) { return dag.earlier(b, a); });
    int implicit_count = 0;
    for (CommitIndex seed : scan) {
        if (claimer.claimed(seed)) continue;
        // Climb to the tip of the unclaimed first-parent chain through seed.
        CommitIndex tip = seed;
        for (;;) {
            std::optional<CommitIndex> next;
            for (CommitIndex ch : dag.children(tip)) {
                if (claimer.claimed(ch) || dag.first_parent(ch) != tip) continue;
                if (!next || dag.earlier(*next, ch)) next = ch;
            }
            if (!next) break;
            tip = *next;
        }
        stems.push_back({"implicit-" + std::to_string(++implicit_count), StemType::Implicit,
                         claimer.claim_chain(tip)});
    }
    return stems;
}

std::vector<Stem> order_stems(std::vector<Stem> stems, const CommitDag& dag) {
    std::stable_sort(stems.begin(), stems.end(), [&](const Stem& a, const Stem& b) {
        const bool ma = a.type == StemType::Main, mb = b.type == StemType::Main;
        if (ma != mb) return ma;
        const auto da = dag.commit(a.head()).commit_date, db = dag.commit(b.head()).commit_date;
        if (da != db) return da > db;
        return a.name < b.name;
    });
    return stems;
}

std::vector<int> stem_membership(const std::vector<Stem>& stems, std::size_t commit_count) {
    std::vector<int> of(commit_count, -1);
    for (std::size_t s = 0; s < stems.size(); ++s)
        for (CommitIndex c : stems[s].commits) of[c] = static_cast<int>(s);
    return of;
}

}  // namespace githru::stemgraph
