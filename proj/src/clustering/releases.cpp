#include "githru/clustering/releases.hpp"

#include <algorithm>
#include <tuple>

namespace githru::clustering {

std::optional<std::string> semantic_version(std::string_view tag) {
    if (!tag.empty() && tag.front() == 'v') tag.remove_prefix(1);
    int parts = 0;
    std::size_t digits = 0;
    for (char ch : tag) {
        if (ch >= '0' && ch <= '9') {
            ++digits;
        } else if (ch == '.' && digits > 0 && parts < 2) {
            ++parts;
            digits = 0;
        } else {
            return std::nullopt;
        }
    }
    if (parts != 2 || digits == 0) return std::nullopt;
    return std::string(tag);
}

namespace {

std::tuple<long, long, long> version_key(const std::string& v) {
    long parts[3] = {0, 0, 0};
    int k = 0;
    for (char ch : v) {
        if (ch == '.')
            ++k;
        else
            parts[k] = parts[k] * 10 + (ch - '0');
    }
    return {parts[0], parts[1], parts[2]};
}

}  // namespace

std::vector<Release> detect_releases(std::span<const ingest::TagRef> tags, const stemgraph::CommitDag& dag) {
    std::vector<Release> out;
    for (const auto& t : tags) {
        auto version = semantic_version(t.name);
        const auto idx = dag.find(t.object_id);
        if (!version || !idx) continue;
        out.push_back({*version, t.name, t.object_id, dag.commit(*idx).commit_date});
    }
    std::sort(out.begin(), out.end(), [](const Release& a, const Release& b) {
        if (a.date != b.date) return a.date < b.date;
        if (version_key(a.version) != version_key(b.version)) return version_key(a.version) < version_key(b.version);
        return a.tag < b.tag;
    });
    return out;
}

}  // namespace githru::clustering
