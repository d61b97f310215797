#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

/// Record sentinel and field separator used by the pinned log format.
inline constexpr std::string_view kRecordSentinel = "\xC2\xA7\xC2\xA7";
inline constexpr std::string_view kFieldSeparator = "\xC2\xA7";

/// Arguments passed to `git` to produce a log in the pinned format.
std::vector<std::string> git_log_arguments();

/// Arguments passed to `git` to produce the tag list.
std::vector<std::string> git_tag_arguments();

/// Parses `git log --all --date-order --pretty=format:"§§%H§%P§%an§%ae§%ad§%cd§%D§%B"
/// --date=unix --numstat` output. Records come back in log order with
/// commit_type and keywords left at their defaults.
///
/// Throws Error(MalformedRecord) naming the 1-based line of a bad header.
std::vector<CommitRecord> parse_git_log(std::string_view raw_log);

/// Inverse of parse_git_log for records whose messages carry no trailing
/// newlines. Emits the same layout git does.
std::string write_git_log(std::span<const CommitRecord> records);

/// Splits a `%D` decoration into branch heads and tags.
void parse_decoration(std::string_view decoration, std::vector<std::string>& branches,
                      std::vector<std::string>& tags);

}  // namespace githru::ingest
