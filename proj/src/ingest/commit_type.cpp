#include "githru/ingest/commit_type.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "githru/ingest/keywords.hpp"

namespace githru::ingest {
namespace {

struct Category {
    CommitType type;
    std::initializer_list<std::string_view> keywords;
};

// Precedence order.
const std::array<Category, 4> kTable{{
    {CommitType::Corrective, {"fix", "bug", "crash", "error", "fail", "repair", "patch", "defect", "issue"}},
    {CommitType::Forward, {"add", "implement", "feature", "create", "introduce", "support", "new"}},
    {CommitType::Reengineering,
     {"refactor", "clean", "cleanup", "rename", "move", "restructure", "optimize", "simplify"}},
    {CommitType::Management,
     {"merge", "release", "version", "doc", "docs", "readme", "license", "changelog", "format", "typo"}},
}};

}  // namespace

CommitType classify_commit_type(std::string_view message) {
    const auto tokens = tokenize(message);
    for (const auto& category : kTable) {
        for (const auto& token : tokens) {
            if (std::find(category.keywords.begin(), category.keywords.end(), token) != category.keywords.end())
                return category.type;
        }
    }
    return CommitType::Management;
}

}  // namespace githru::ingest
