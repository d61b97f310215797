#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

enum class PrState : std::uint8_t { Open, Closed, Merged };

std::string_view to_string(PrState state) noexcept;
std::optional<PrState> parse_pr_state(std::string_view text) noexcept;

struct PullRequest {
    int number = 0;
    std::string title;
    std::string body;
    PrState state = PrState::Open;
    std::optional<std::string> merge_commit_id;  // present iff Merged
    std::optional<std::string> head_commit_id;
    std::string author_name;
    Timestamp created_at = 0;
    std::optional<Timestamp> merged_at;

    bool operator==(const PullRequest&) const = default;
};

/// Parses the PR dump: a JSON array of objects with the fields number,
/// title, body, state, merge_commit_sha, head_sha, author, created_at and
/// merged_at. A merge_commit_sha on an open or closed PR is dropped.
///
/// Throws Error(InvalidPrDump) on schema violations.
std::vector<PullRequest> parse_pr_dump(std::string_view json_text);
std::string write_pr_dump(const std::vector<PullRequest>& prs);

struct PrHead {
    int number = 0;
    std::string commit_id;
    PrState state = PrState::Open;
};

struct PrLinks {
    std::map<std::string, int> merge_commit_pr;  // merge commit id -> PR number
    std::vector<PrHead> heads;
    std::vector<std::string> warnings;
};

/// Links merged PRs to their merge commits and every PR with a resolvable
/// head to that head commit. Unresolvable links become warnings.
///
/// Throws Error(DuplicatePrNumber).
PrLinks attach_pull_requests(const std::vector<CommitRecord>& commits, const std::vector<PullRequest>& prs);

}  // namespace githru::ingest
