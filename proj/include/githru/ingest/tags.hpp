#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

struct TagRef {
    std::string name;
    std::string object_id;

    bool operator==(const TagRef&) const = default;
};

/// Parses "<tag name> <commit id>" lines as produced by git_tag_arguments().
/// Throws Error(MalformedRecord) on a line without an object name.
std::vector<TagRef> parse_tag_list(std::string_view text);

/// Adds each tag to the commit it names. Annotated tags name a tag object
/// rather than a commit; those are already present through the log
/// decoration and are skipped silently when so. Returns warnings for tags
/// that resolve to nothing.
std::vector<std::string> apply_tags(std::vector<CommitRecord>& commits, const std::vector<TagRef>& tags);

/// Every (tag, commit) pair carried by the records.
std::vector<TagRef> collect_tags(const std::vector<CommitRecord>& commits);

}  // namespace githru::ingest
