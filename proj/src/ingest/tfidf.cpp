#include "githru/ingest/tfidf.hpp"

#include <cmath>

#include "githru/error.hpp"

namespace githru::ingest {

const SparseVector& TfIdfIndex::vector_of(std::string_view commit_id) const {
    static const SparseVector empty;
    const auto it = vectors_.find(std::string(commit_id));
    return it == vectors_.end() ? empty : it->second;
}

double TfIdfIndex::idf(std::string_view token) const {
    const auto it = document_frequency_.find(std::string(token));
    const int df = it == document_frequency_.end() ? 1 : it->second;
    return std::log(static_cast<double>(document_count_) / static_cast<double>(df));
}

SparseVector TfIdfIndex::vectorize(std::span<const KeywordCount> keywords) const {
    SparseVector v;
    for (const auto& kw : keywords) {
        const double w = kw.count * idf(kw.token);
        if (w != 0.0) v[kw.token] += w;
    }
    return v;
}

TfIdfIndex build_tfidf_index(std::span<const CommitRecord> commits) {
    if (commits.empty()) throw Error(ErrorCode::EmptyCorpus, "no commits to index");
    TfIdfIndex index;
    index.document_count_ = commits.size();
    for (const auto& c : commits)
        for (const auto& kw : c.keywords) ++index.document_frequency_[kw.token];
    for (const auto& c : commits) index.vectors_[c.id] = index.vectorize(c.keywords);
    return index;
}

}  // namespace githru::ingest
