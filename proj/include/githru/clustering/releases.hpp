#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "githru/ingest/tags.hpp"
#include "githru/stemgraph/dag.hpp"

namespace githru::clustering {

struct Release {
    std::string version;  // "MAJOR.MINOR.PATCH"
    std::string tag;
    std::string commit_id;
    Timestamp date = 0;

    bool operator==(const Release&) const = default;
};

/// "v1.2.3" or "1.2.3" -> "1.2.3"; anything else -> nullopt.
std::optional<std::string> semantic_version(std::string_view tag);

/// Semantic-version tags on known commits, ordered by tagged commit date.
std::vector<Release> detect_releases(std::span<const ingest::TagRef> tags, const stemgraph::CommitDag& dag);

}  // namespace githru::clustering
