#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

using SparseVector = std::map<std::string, double>;

/// Document = one commit message; tf = raw count; idf = ln(N / df).
class TfIdfIndex {
public:
    std::size_t document_count() const noexcept { return document_count_; }
    const std::map<std::string, int>& document_frequency() const noexcept { return document_frequency_; }

    /// Vector of a commit in the corpus; empty for unknown ids.
    const SparseVector& vector_of(std::string_view commit_id) const;
    const std::unordered_map<std::string, SparseVector>& vectors() const noexcept { return vectors_; }

    /// idf of a vocabulary token. Tokens outside the vocabulary are treated
    /// as occurring in a single document.
    double idf(std::string_view token) const;

    /// Weights an arbitrary keyword list against this corpus. Zero weights
    /// are dropped.
    SparseVector vectorize(std::span<const KeywordCount> keywords) const;

private:
    friend TfIdfIndex build_tfidf_index(std::span<const CommitRecord> commits);

    std::size_t document_count_ = 0;
    std::map<std::string, int> document_frequency_;
    std::unordered_map<std::string, SparseVector> vectors_;
};

/// Throws Error(EmptyCorpus) on an empty commit list.
TfIdfIndex build_tfidf_index(std::span<const CommitRecord> commits);

}  // namespace githru::ingest
