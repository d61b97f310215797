#pragma once

#include <string_view>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

/// Keyword-table classification. Whole-token, case-insensitive; the first
/// category hit in the order Corrective, Forward, Reengineering, Management
/// wins, and a message with no hit is Management.
CommitType classify_commit_type(std::string_view message);

}  // namespace githru::ingest
