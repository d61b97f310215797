#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "githru/snapshot.hpp"

namespace githru::analytics {

using stemgraph::StemType;

/// A stem node: a plain commit, or a squash-merge base when `csm >= 0`.
struct ViewNode {
    CommitIndex base = 0;
    int csm = -1;

    bool operator==(const ViewNode&) const = default;
};

struct ViewStem {
    std::string name;
    StemType type = StemType::Implicit;
    std::vector<ViewNode> nodes;
};

struct View {
    bool csm_enabled = true;
    std::vector<ViewStem> stems;  // display order
    /// Base-to-source edges, exposed when squash merge is off.
    std::vector<std::pair<CommitIndex, CommitIndex>> csm_edges;

    std::size_t node_count() const;
    std::size_t commit_count(const AnalysisSnapshot& snap) const;
};

/// Commits represented by a node, base first.
std::vector<CommitIndex> node_commits(const AnalysisSnapshot& snap, const ViewNode& node);
const NodeFeatures& node_features(const AnalysisSnapshot& snap, const ViewNode& node);
/// Fused message for squash-merged nodes, the commit message otherwise.
const std::string& node_message(const AnalysisSnapshot& snap, const ViewNode& node);
const std::vector<ingest::KeywordCount>& node_keywords(const AnalysisSnapshot& snap, const ViewNode& node);

/// The squash-merged structure, or the raw stems when disabled.
View toggle_csm(const AnalysisSnapshot& snap, bool enabled);

enum class KeywordCriterion : std::uint8_t { Author, Type, File, Message };
enum class FilterMode : std::uint8_t { Include, Exclude };

std::string_view to_string(KeywordCriterion c) noexcept;
std::optional<KeywordCriterion> parse_keyword_criterion(std::string_view text) noexcept;
std::string_view to_string(FilterMode m) noexcept;
std::optional<FilterMode> parse_filter_mode(std::string_view text) noexcept;

/// Case-insensitive substring test.
bool contains_ignore_case(std::string_view haystack, std::string_view needle);

/// Keeps nodes whose base commit date lies in [from, to]. Stems left empty
/// are dropped. Throws Error(InvalidRange) when from > to.
View filter_temporal(const AnalysisSnapshot& snap, View view, Timestamp from, Timestamp to);

/// A squash-merged node matches when its base or any source matches.
/// Throws Error(EmptyKeyword).
View filter_keyword(const AnalysisSnapshot& snap, View view, KeywordCriterion criterion, std::string_view keyword,
                    FilterMode mode);

View filter_stem_types(View view, const std::set<StemType>& visible);

}  // namespace githru::analytics
