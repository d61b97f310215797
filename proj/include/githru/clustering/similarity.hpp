#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "githru/time_util.hpp"

namespace githru::clustering {

/// Sorted, duplicate-free interned labels.
using LabelSet = std::vector<std::uint32_t>;
/// Sparse vector sorted by term id.
using TermVector = std::vector<std::pair<std::uint32_t, double>>;

/// Per-criterion features of a node or a cluster of nodes.
struct Aggregate {
    LabelSet authors;
    LabelSet types;
    LabelSet files;
    TermVector keywords;  // mean of member TF-IDF vectors
    Timestamp first_date = 0;
    Timestamp last_date = 0;
};

struct SimilarityWeights {
    double author = 1.0;
    double date = 1.0;
    double type = 1.0;
    double file = 1.0;
    double message = 1.0;

    /// Scaled to sum 1. Throws Error(InvalidParams) on negative or non-finite
    /// weights or when all are zero.
    SimilarityWeights normalized() const;

    bool operator==(const SimilarityWeights&) const = default;
};

inline constexpr int kDefaultDateHorizonDays = 365;

/// |a ∩ b| / |a ∪ b|, with J(∅, ∅) = 1.
double jaccard(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// 0 when either vector is zero.
double cosine(const TermVector& a, const TermVector& b);

/// Gap in days between [a_first, a_last] and [b_first, b_last]; 0 when the
/// ranges touch or overlap.
double date_gap_days(Timestamp a_first, Timestamp a_last, Timestamp b_first, Timestamp b_last);

/// 1 - min(1, ln(1 + gap) / ln(1 + horizon)).
double date_similarity(double gap_days, int horizon_days);

/// Simple additive weighting over the five criteria. `weights` must already
/// be normalized. Result lies in [0, 1].
double similarity(const Aggregate& a, const Aggregate& b, const SimilarityWeights& weights,
                  int horizon_days = kDefaultDateHorizonDays);

/// Folds `from` (standing for `from_members` nodes) into `into` (standing
/// for `into_members` nodes): sets unioned, keyword mean re-weighted, date
/// range extended.
void merge_aggregate(Aggregate& into, std::size_t into_members, const Aggregate& from, std::size_t from_members);

}  // namespace githru::clustering
