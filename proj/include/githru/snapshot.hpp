#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "githru/clustering/releases.hpp"
#include "githru/clustering/similarity.hpp"
#include "githru/csm/csm.hpp"
#include "githru/ingest/commit.hpp"
#include "githru/ingest/keywords.hpp"
#include "githru/ingest/pull_request.hpp"
#include "githru/ingest/tags.hpp"
#include "githru/ingest/tfidf.hpp"
#include "githru/stemgraph/dag.hpp"
#include "githru/stemgraph/stems.hpp"

namespace githru {

using stemgraph::CommitIndex;

inline constexpr int kSnapshotVersion = 1;

struct SnapshotInputs {
    std::string repo_id;
    std::vector<ingest::CommitRecord> commits;  // log order
    std::vector<ingest::PullRequest> prs;
    std::vector<ingest::TagRef> tags;
    std::string main_branch = "master";
    std::optional<std::vector<std::string>> stop_words;  // bundled English list when unset
    bool annotated = false;  // commit types and keywords already populated
};

/// Parses the three raw inputs. Empty `pr_json` / `tag_list` mean none.
SnapshotInputs inputs_from_raw(std::string repo_id, std::string_view git_log, std::string_view pr_json,
                               std::string_view tag_list, std::string main_branch = "master");

/// Classifies and extracts keywords for every commit.
void annotate_commits(std::vector<ingest::CommitRecord>& commits, const ingest::StopWords& stop_words);

/// Interned labels for one criterion.
class Interner {
public:
    std::uint32_t intern(std::string_view label);
    std::optional<std::uint32_t> find(std::string_view label) const;
    const std::string& label(std::uint32_t id) const { return labels_[id]; }
    std::size_t size() const noexcept { return labels_.size(); }

private:
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::vector<std::string> labels_;
};

/// Clustering and summary features of one stem node.
struct NodeFeatures {
    clustering::Aggregate aggregate;
    std::size_t commit_count = 1;
    std::uint64_t cloc = 0;
    std::array<int, ingest::kCommitTypeCount> type_counts{};
    std::optional<std::string> release_tag;
};

/// The preprocessed, immutable result of ingesting one repository. Every
/// view is a pure function of a snapshot and query parameters.
class AnalysisSnapshot {
public:
    /// Throws Error on malformed inputs; EmptyCorpus when there are no commits.
    static std::shared_ptr<const AnalysisSnapshot> build(SnapshotInputs inputs);

    const std::string& repo_id() const noexcept { return repo_id_; }
    const std::string& main_branch() const noexcept { return main_branch_; }
    const stemgraph::CommitDag& dag() const noexcept { return dag_; }
    const ingest::CommitRecord& commit(CommitIndex i) const { return dag_.commit(i); }
    const std::vector<stemgraph::Stem>& raw_stems() const noexcept { return raw_stems_; }
    const csm::CsmResult& csm() const noexcept { return csm_; }
    const ingest::TfIdfIndex& tfidf() const noexcept { return tfidf_; }
    const std::vector<clustering::Release>& releases() const noexcept { return releases_; }
    const std::vector<ingest::PullRequest>& prs() const noexcept { return prs_; }
    const ingest::PrLinks& pr_links() const noexcept { return pr_links_; }
    const ingest::StopWords& stop_words() const noexcept { return stop_words_; }
    bool custom_stop_words() const noexcept { return custom_stop_words_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    Timestamp created_at() const noexcept { return created_at_; }

    const Interner& authors() const noexcept { return authors_; }
    const Interner& files() const noexcept { return files_; }
    const Interner& terms() const noexcept { return terms_; }

    const NodeFeatures& plain_features(CommitIndex c) const { return plain_[c]; }
    const NodeFeatures& csm_features(std::size_t node) const { return fused_[node]; }

    /// Latest release version tagging this commit, if any.
    const std::optional<std::string>& release_of(CommitIndex c) const { return release_of_[c]; }

    /// Keyword vector of a term-id vector as token strings.
    ingest::SparseVector term_labels(const clustering::TermVector& v) const;

private:
    AnalysisSnapshot() = default;

    NodeFeatures features_for(const ingest::CommitRecord& base, std::span<const std::string> coauthors,
                              const ingest::SparseVector& keywords) ;

    std::string repo_id_;
    std::string main_branch_;
    stemgraph::CommitDag dag_;
    std::vector<stemgraph::Stem> raw_stems_;
    csm::CsmResult csm_;
    ingest::TfIdfIndex tfidf_;
    std::vector<clustering::Release> releases_;
    std::vector<ingest::PullRequest> prs_;
    ingest::PrLinks pr_links_;
    ingest::StopWords stop_words_;
    bool custom_stop_words_ = false;
    std::vector<std::string> warnings_;
    Timestamp created_at_ = 0;

    Interner authors_;
    Interner files_;
    Interner terms_;
    std::vector<NodeFeatures> plain_;
    std::vector<NodeFeatures> fused_;
    std::vector<std::optional<std::string>> release_of_;
};

/// Versioned JSON envelope {version, repoId, mainBranch, commits, prs,
/// releases[, stopWords]}. Stems and clusters are never stored.
std::string write_snapshot_file(const AnalysisSnapshot& snapshot);

/// Throws Error(InvalidSnapshot).
SnapshotInputs read_snapshot_file(std::string_view text);

}  // namespace githru
