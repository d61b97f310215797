#include "githru/analytics/view.hpp"

#include <algorithm>
#include <cctype>

#include "githru/error.hpp"

namespace githru::analytics {

std::size_t View::node_count() const {
    std::size_t n = 0;
    for (const auto& s : stems) n += s.nodes.size();
    return n;
}

std::size_t View::commit_count(const AnalysisSnapshot& snap) const {
    std::size_t n = 0;
    for (const auto& s : stems)
        for (const auto& node : s.nodes) n += node_features(snap, node).commit_count;
    return n;
}

std::vector<CommitIndex> node_commits(const AnalysisSnapshot& snap, const ViewNode& node) {
    std::vector<CommitIndex> out{node.base};
    if (node.csm >= 0) {
        const auto& sources = snap.csm().nodes[node.csm].sources;
        out.insert(out.end(), sources.begin(), sources.end());
    }
    return out;
}

const NodeFeatures& node_features(const AnalysisSnapshot& snap, const ViewNode& node) {
    return node.csm >= 0 ? snap.csm_features(static_cast<std::size_t>(node.csm)) : snap.plain_features(node.base);
}

const std::string& node_message(const AnalysisSnapshot& snap, const ViewNode& node) {
    return node.csm >= 0 ? snap.csm().nodes[node.csm].fused_message : snap.commit(node.base).message;
}

const std::vector<ingest::KeywordCount>& node_keywords(const AnalysisSnapshot& snap, const ViewNode& node) {
    return node.csm >= 0 ? snap.csm().nodes[node.csm].fused_keywords : snap.commit(node.base).keywords;
}

View toggle_csm(const AnalysisSnapshot& snap, bool enabled) {
    View view;
    view.csm_enabled = enabled;
    const auto& csm = snap.csm();
    const auto& stems = enabled ? csm.stems : snap.raw_stems();
    for (const auto& stem : stems) {
        ViewStem vs{stem.name, stem.type, {}};
        vs.nodes.reserve(stem.commits.size());
        for (CommitIndex c : stem.commits) vs.nodes.push_back({c, enabled ? csm.node_of_base[c] : -1});
        view.stems.push_back(std::move(vs));
    }
    if (!enabled) {
        for (const auto& node : csm.nodes)
            for (CommitIndex s : node.sources) view.csm_edges.emplace_back(node.base, s);
    }
    return view;
}

std::string_view to_string(KeywordCriterion c) noexcept {
    switch (c) {
        case KeywordCriterion::Author: return "author";
        case KeywordCriterion::Type: return "type";
        case KeywordCriterion::File: return "file";
        case KeywordCriterion::Message: return "message";
    }
    return "message";
}

std::optional<KeywordCriterion> parse_keyword_criterion(std::string_view text) noexcept {
    if (text == "author") return KeywordCriterion::Author;
    if (text == "type") return KeywordCriterion::Type;
    if (text == "file") return KeywordCriterion::File;
    if (text == "message") return KeywordCriterion::Message;
    return std::nullopt;
}

std::string_view to_string(FilterMode m) noexcept { return m == FilterMode::Include ? "include" : "exclude"; }

std::optional<FilterMode> parse_filter_mode(std::string_view text) noexcept {
    if (text == "include") return FilterMode::Include;
    if (text == "exclude") return FilterMode::Exclude;
    return std::nullopt;
}

bool contains_ignore_case(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    const auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(), [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
    });
    return it != haystack.end();
}

namespace {

template <typename Keep>
View retain(View view, Keep keep) {
    std::vector<ViewStem> stems;
    for (auto& stem : view.stems) {
        std::erase_if(stem.nodes, [&](const ViewNode& n) { return !keep(n); });
        if (!stem.nodes.empty()) stems.push_back(std::move(stem));
    }
    view.stems = std::move(stems);
    return view;
}

void prune_edges(View& view) {
    std::set<CommitIndex> present;
    for (const auto& s : view.stems)
        for (const auto& n : s.nodes) present.insert(n.base);
    std::erase_if(view.csm_edges, [&](const auto& e) { return !present.count(e.first) || !present.count(e.second); });
}

bool commit_matches(const ingest::CommitRecord& c, KeywordCriterion criterion, std::string_view keyword) {
    switch (criterion) {
        case KeywordCriterion::Author:
            return contains_ignore_case(c.author_name, keyword) || contains_ignore_case(c.author_email, keyword);
        case KeywordCriterion::Type: return contains_ignore_case(ingest::to_string(c.commit_type), keyword);
        case KeywordCriterion::File:
            return std::any_of(c.file_changes.begin(), c.file_changes.end(),
                               [&](const ingest::FileChange& fc) { return contains_ignore_case(fc.path, keyword); });
        case KeywordCriterion::Message: return contains_ignore_case(c.message, keyword);
    }
    return false;
}

}  // namespace

View filter_temporal(const AnalysisSnapshot& snap, View view, Timestamp from, Timestamp to) {
    if (from > to) throw Error(ErrorCode::InvalidRange, "from is after to");
    view = retain(std::move(view), [&](const ViewNode& n) {
        const Timestamp t = snap.commit(n.base).commit_date;
        return t >= from && t <= to;
    });
    prune_edges(view);
    return view;
}

View filter_keyword(const AnalysisSnapshot& snap, View view, KeywordCriterion criterion, std::string_view keyword,
                    FilterMode mode) {
    if (keyword.empty()) throw Error(ErrorCode::EmptyKeyword, "keyword filter needs text");
    view = retain(std::move(view), [&](const ViewNode& n) {
        bool match = criterion == KeywordCriterion::Message && contains_ignore_case(node_message(snap, n), keyword);
        for (CommitIndex c : node_commits(snap, n)) match = match || commit_matches(snap.commit(c), criterion, keyword);
        return mode == FilterMode::Include ? match : !match;
    });
    prune_edges(view);
    return view;
}

View filter_stem_types(View view, const std::set<StemType>& visible) {
    std::erase_if(view.stems, [&](const ViewStem& s) { return !visible.count(s.type); });
    prune_edges(view);
    return view;
}

}  // namespace githru::analytics
