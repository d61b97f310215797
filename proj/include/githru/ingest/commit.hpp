#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "githru/time_util.hpp"

namespace githru::ingest {

/// Hattori-style commit categories.
enum class CommitType : std::uint8_t { Forward, Reengineering, Corrective, Management };

inline constexpr std::size_t kCommitTypeCount = 4;

std::string_view to_string(CommitType type) noexcept;
std::optional<CommitType> parse_commit_type(std::string_view text) noexcept;

/// One numstat line. Binary files have no line counts.
struct FileChange {
    std::string path;
    std::optional<std::uint64_t> insertions;
    std::optional<std::uint64_t> deletions;
    bool is_binary = false;

    std::uint64_t cloc() const noexcept { return insertions.value_or(0) + deletions.value_or(0); }

    bool operator==(const FileChange&) const = default;
};

struct KeywordCount {
    std::string token;
    int count = 0;

    bool operator==(const KeywordCount&) const = default;
};

struct CommitRecord {
    std::string id;
    std::vector<std::string> parents;  // first parent first
    std::string author_name;
    std::string author_email;
    Timestamp author_date = 0;
    Timestamp commit_date = 0;
    std::string message;
    std::vector<FileChange> file_changes;
    std::vector<std::string> tags;
    std::vector<std::string> branch_heads;
    CommitType commit_type = CommitType::Management;
    std::vector<KeywordCount> keywords;

    std::uint64_t cloc() const noexcept {
        std::uint64_t total = 0;
        for (const auto& fc : file_changes) total += fc.cloc();
        return total;
    }

    bool is_merge() const noexcept { return parents.size() >= 2; }

    bool operator==(const CommitRecord&) const = default;
};

/// True for a 40-character lowercase hexadecimal object name.
bool is_object_id(std::string_view text) noexcept;

}  // namespace githru::ingest
