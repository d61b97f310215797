#include "githru/csm/csm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "githru/error.hpp"

namespace githru::csm {

using stemgraph::CommitDag;
using stemgraph::Stem;
using stemgraph::StemType;

StemLocator locate(const std::vector<Stem>& stems, std::size_t commit_count) {
    StemLocator loc;
    loc.stem_of.assign(commit_count, -1);
    loc.position.assign(commit_count, 0);
    for (std::size_t s = 0; s < stems.size(); ++s) {
        for (std::size_t i = 0; i < stems[s].commits.size(); ++i) {
            loc.stem_of[stems[s].commits[i]] = static_cast<int>(s);
            loc.position[stems[s].commits[i]] = i;
        }
    }
    return loc;
}

std::vector<CommitIndex> csm_sources(const CommitDag& dag, const std::vector<Stem>& stems,
                                     const StemLocator& locator, CommitIndex merge,
                                     const std::vector<bool>& unavailable) {
    const auto parents = dag.parents(merge);
    if (parents.size() < 2) throw Error(ErrorCode::NotAMerge, dag.id(merge) + " has a single parent");

    const int own_stem = locator.stem_of[merge];
    std::vector<CommitIndex> sources;
    std::set<CommitIndex> taken;
    for (std::size_t k = 1; k < parents.size(); ++k) {
        const CommitIndex p = parents[k];
        const int s = locator.stem_of[p];
        if (s < 0 || s == own_stem || stems[s].type == StemType::Main) continue;
        std::vector<CommitIndex> run;
        for (std::size_t pos = locator.position[p] + 1; pos-- > 0;) {
            const CommitIndex c = stems[s].commits[pos];
            if (unavailable[c] || taken.count(c)) break;
            run.push_back(c);
        }
        std::reverse(run.begin(), run.end());
        for (CommitIndex c : run) {
            taken.insert(c);
            sources.push_back(c);
        }
    }
    return sources;
}

namespace {

class Fuser {
public:
    Fuser(const CommitDag& dag, const std::vector<Stem>& stems, const ingest::PrLinks& pr_links,
          const std::vector<ingest::PullRequest>& prs, const ingest::StopWords& stop_words)
        : dag_(dag), stems_(stems), locator_(locate(stems, dag.size())), pr_links_(pr_links),
          stop_words_(stop_words), unavailable_(dag.size(), false) {
        for (const auto& pr : prs) prs_by_number_[pr.number] = &pr;
        result_.node_of_base.assign(dag.size(), -1);
        result_.consumed_by.assign(dag.size(), -1);
        consumed_.assign(dag.size(), false);
    }

    void process_stem(std::size_t s) {
        std::vector<CommitIndex> merges;
        for (CommitIndex c : stems_[s].commits)
            if (!consumed_[c] && dag_.parents(c).size() >= 2) merges.push_back(c);
        std::sort(merges.begin(), merges.end(), [&](CommitIndex a, CommitIndex b) {
            if (dag_.commit(a).commit_date != dag_.commit(b).commit_date)
                return dag_.commit(a).commit_date < dag_.commit(b).commit_date;
            if (dag_.topo_rank(a) != dag_.topo_rank(b)) return dag_.topo_rank(a) < dag_.topo_rank(b);
            return dag_.id(a) < dag_.id(b);
        });
        for (CommitIndex m : merges) fuse(m);
    }

    CsmResult finish() {
        for (const auto& stem : stems_) {
            Stem kept{stem.name, stem.type, {}};
            for (CommitIndex c : stem.commits)
                if (!consumed_[c]) kept.commits.push_back(c);
            if (!kept.commits.empty()) result_.stems.push_back(std::move(kept));
        }
        result_.stems = stemgraph::order_stems(std::move(result_.stems), dag_);
        return std::move(result_);
    }

    /// Last remaining commit of a stem, if any.
    std::optional<CommitIndex> last_remaining(std::size_t s) const {
        const auto& commits = stems_[s].commits;
        for (auto it = commits.rbegin(); it != commits.rend(); ++it)
            if (!consumed_[*it]) return *it;
        return std::nullopt;
    }

private:
    void fuse(CommitIndex merge) {
        auto sources = csm_sources(dag_, stems_, locator_, merge, unavailable_);
        const auto pr_it = pr_links_.merge_commit_pr.find(dag_.id(merge));
        const bool has_pr = pr_it != pr_links_.merge_commit_pr.end();
        if (sources.empty() && !has_pr) return;

        const auto& base = dag_.commit(merge);
        CsmNode node;
        node.base = merge;
        node.fused_message = base.message;
        ++node.type_counts[static_cast<std::size_t>(base.commit_type)];

        std::set<std::string> coauthors;
        for (CommitIndex c : sources) {
            const auto& src = dag_.commit(c);
            if (src.author_name != base.author_name) coauthors.insert(src.author_name);
            ++node.type_counts[static_cast<std::size_t>(src.commit_type)];
            if (!src.message.empty()) {
                node.fused_message += "\n\n";
                node.fused_message += src.message;
            }
        }
        if (has_pr) {
            node.pr_refs.push_back(pr_it->second);
            const auto pr = prs_by_number_.find(pr_it->second);
            node.fused_message += "\n\nPR #" + std::to_string(pr_it->second);
            if (pr != prs_by_number_.end()) {
                node.fused_message += ": " + pr->second->title;
                if (!pr->second->body.empty()) node.fused_message += "\n\n" + pr->second->body;
            }
        }
        node.coauthors.assign(coauthors.begin(), coauthors.end());
        node.fused_keywords = ingest::extract_keywords(node.fused_message, stop_words_);

        const int index = static_cast<int>(result_.nodes.size());
        for (CommitIndex c : sources) {
            consumed_[c] = true;
            unavailable_[c] = true;
            result_.consumed_by[c] = index;
        }
        unavailable_[merge] = true;
        result_.node_of_base[merge] = index;
        node.sources = std::move(sources);
        result_.nodes.push_back(std::move(node));
    }

    const CommitDag& dag_;
    const std::vector<Stem>& stems_;
    StemLocator locator_;
    const ingest::PrLinks& pr_links_;
    const ingest::StopWords& stop_words_;
    std::map<int, const ingest::PullRequest*> prs_by_number_;
    std::vector<bool> unavailable_;  // consumed, or already a base
    std::vector<bool> consumed_;
    CsmResult result_;
};

}  // namespace

CsmResult apply_csm(const std::vector<Stem>& stems, const CommitDag& dag, const ingest::PrLinks& pr_links,
                    const std::vector<ingest::PullRequest>& prs, const ingest::StopWords& stop_words) {
    Fuser fuser(dag, stems, pr_links, prs, stop_words);

    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < stems.size(); ++s) {
        if (stems[s].type == StemType::Main)
            fuser.process_stem(s);
        else
            others.push_back(s);
    }

    struct Pending {
        std::size_t stem;
        Timestamp last_date;
    };
    std::vector<Pending> order;
    for (std::size_t s : others)
        if (auto last = fuser.last_remaining(s)) order.push_back({s, dag.commit(*last).commit_date});
    std::sort(order.begin(), order.end(), [&](const Pending& a, const Pending& b) {
        if (a.last_date != b.last_date) return a.last_date > b.last_date;
        return stems[a.stem].name < stems[b.stem].name;
    });
    for (const auto& p : order) fuser.process_stem(p.stem);
    return fuser.finish();
}

}  // namespace githru::csm
