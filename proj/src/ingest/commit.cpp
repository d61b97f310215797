#include "githru/ingest/commit.hpp"

namespace githru::ingest {

std::string_view to_string(CommitType type) noexcept {
    switch (type) {
        case CommitType::Forward: return "forward";
        case CommitType::Reengineering: return "reengineering";
        case CommitType::Corrective: return "corrective";
        case CommitType::Management: return "management";
    }
    return "management";
}

std::optional<CommitType> parse_commit_type(std::string_view text) noexcept {
    if (text == "forward") return CommitType::Forward;
    if (text == "reengineering") return CommitType::Reengineering;
    if (text == "corrective") return CommitType::Corrective;
    if (text == "management") return CommitType::Management;
    return std::nullopt;
}

bool is_object_id(std::string_view text) noexcept {
    if (text.size() != 40) return false;
    for (char c : text)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    return true;
}

}  // namespace githru::ingest
