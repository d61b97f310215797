#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "githru/analytics/graph.hpp"

namespace githru::analytics {

inline constexpr std::size_t kDiffTopFiles = 10;
inline constexpr std::size_t kDiffTopKeywords = 20;

enum class Metric : std::uint8_t { CommitCount, Cloc };

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view text) noexcept;

/// A captured set of clusters, resolved to its nodes at capture time so it
/// stays valid when the view parameters change.
struct Selection {
    std::string id;
    std::string name;
    std::vector<std::string> cluster_ids;
    Timestamp captured_at = 0;
    std::vector<ViewNode> nodes;
};

/// Throws Error(EmptySelection) or Error(UnknownCluster).
Selection capture_selection(const Graph& graph, std::string id, std::string name,
                            std::vector<std::string> cluster_ids, Timestamp captured_at);

struct DiffEntry {
    std::string label;
    double value_a = 0.0;
    double value_b = 0.0;
    double size = 0.0;  // keywords: min-max normalized TF-IDF

    bool operator==(const DiffEntry&) const = default;
};

struct DiffSets {
    std::vector<DiffEntry> intersection;
    std::vector<DiffEntry> only_a;
    std::vector<DiffEntry> only_b;
};

struct DiffResult {
    Metric metric = Metric::CommitCount;
    DiffSets authors;
    DiffSets types;
    DiffSets files;     // top 10 per side
    DiffSets keywords;  // top 20 per side by TF-IDF
};

/// Splits two label->value maps into intersection / only-A / only-B.
DiffSets partition(const std::map<std::string, double>& a, const std::map<std::string, double>& b);

/// Throws Error(EmptySelection).
DiffResult compare(const AnalysisSnapshot& snap, const Selection& a, const Selection& b, Metric metric);

}  // namespace githru::analytics
