#include "githru/clustering/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "githru/error.hpp"

namespace githru::clustering {

SimilarityWeights SimilarityWeights::normalized() const {
    const double parts[] = {author, date, type, file, message};
    double sum = 0.0;
    for (double p : parts) {
        if (!std::isfinite(p) || p < 0.0) throw Error(ErrorCode::InvalidParams, "weights must be finite and >= 0");
        sum += p;
    }
    if (sum <= 0.0) throw Error(ErrorCode::InvalidParams, "at least one weight must be positive");
    return {author / sum, date / sum, type / sum, file / sum, message / sum};
}

double jaccard(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

double cosine(const TermVector& a, const TermVector& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [_, w] : a) na += w * w;
    for (const auto& [_, w] : b) nb += w * w;
    if (na == 0.0 || nb == 0.0) return 0.0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            dot += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

double date_gap_days(Timestamp a_first, Timestamp a_last, Timestamp b_first, Timestamp b_last) {
    const Timestamp gap = std::max(a_first, b_first) - std::min(a_last, b_last);
    return gap <= 0 ? 0.0 : static_cast<double>(gap) / static_cast<double>(kSecondsPerDay);
}

double date_similarity(double gap_days, int horizon_days) {
    if (gap_days <= 0.0) return 1.0;
    const double growth = std::log1p(gap_days) / std::log1p(static_cast<double>(horizon_days));
    return 1.0 - std::min(1.0, growth);
}

double similarity(const Aggregate& a, const Aggregate& b, const SimilarityWeights& w, int horizon_days) {
    double s = 0.0;
    if (w.author > 0.0) s += w.author * jaccard(a.authors, b.authors);
    if (w.type > 0.0) s += w.type * jaccard(a.types, b.types);
    if (w.file > 0.0) s += w.file * jaccard(a.files, b.files);
    if (w.message > 0.0) s += w.message * cosine(a.keywords, b.keywords);
    if (w.date > 0.0)
        s += w.date * date_similarity(date_gap_days(a.first_date, a.last_date, b.first_date, b.last_date),
                                      horizon_days);
    return std::clamp(s, 0.0, 1.0);
}

namespace {

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

void merge_aggregate(Aggregate& into, std::size_t into_members, const Aggregate& from, std::size_t from_members) {
    into.authors = set_union(into.authors, from.authors);
    into.types = set_union(into.types, from.types);
    into.files = set_union(into.files, from.files);

    const double total = static_cast<double>(into_members + from_members);
    const double wi = static_cast<double>(into_members) / total;
    const double wf = static_cast<double>(from_members) / total;
    TermVector merged;
    merged.reserve(into.keywords.size() + from.keywords.size());
    auto i = into.keywords.begin();
    auto j = from.keywords.begin();
    while (i != into.keywords.end() || j != from.keywords.end()) {
        if (j == from.keywords.end() || (i != into.keywords.end() && i->first < j->first)) {
            merged.emplace_back(i->first, i->second * wi);
            ++i;
        } else if (i == into.keywords.end() || j->first < i->first) {
            merged.emplace_back(j->first, j->second * wf);
            ++j;
        } else {
            merged.emplace_back(i->first, i->second * wi + j->second * wf);
            ++i;
            ++j;
        }
    }
    into.keywords = std::move(merged);
    into.first_date = std::min(into.first_date, from.first_date);
    into.last_date = std::max(into.last_date, from.last_date);
}

}  // namespace githru::clustering
