#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "githru/stemgraph/dag.hpp"

namespace githru::stemgraph {

enum class StemType : std::uint8_t { Main, Explicit, Implicit, PrOpen, PrMerged, PrClosed };

inline constexpr std::size_t kStemTypeCount = 6;

std::string_view to_string(StemType type) noexcept;
std::optional<StemType> parse_stem_type(std::string_view text) noexcept;

/// A first-parent path, ancestor first.
struct Stem {
    std::string name;
    StemType type = StemType::Implicit;
    std::vector<CommitIndex> commits;

    CommitIndex head() const { return commits.back(); }
};

/// Partitions the DAG into stems. The main branch claims its first-parent
/// chain first, then the other branch heads and PR heads (each group by head
/// commit date, most recent first) claim theirs. Leftover commits form
/// "implicit-<k>" stems discovered from the most recent commit down.
///
/// "origin/<main>" is accepted when no local branch named `main_branch`
/// exists. Throws Error(UnknownMainBranch).
std::vector<Stem> build_stems(const CommitDag& dag, std::string_view main_branch);

/// Main first, then by last commit date descending, ties by name.
std::vector<Stem> order_stems(std::vector<Stem> stems, const CommitDag& dag);

/// For every commit, the index of the stem holding it (or -1).
std::vector<int> stem_membership(const std::vector<Stem>& stems, std::size_t commit_count);

}  // namespace githru::stemgraph
