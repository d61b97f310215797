#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "githru/ingest/commit.hpp"

namespace githru::ingest {

class StopWords {
public:
    StopWords() = default;
    explicit StopWords(std::vector<std::string> words);

    /// The bundled English list.
    static const StopWords& english();

    /// One word per line; blank lines and lines starting with '#' are skipped.
    static StopWords from_file(const std::filesystem::path& path);
    static StopWords parse(std::string_view text);

    bool contains(std::string_view token) const;
    std::size_t size() const noexcept { return words_.size(); }

    /// Sorted copy of the word list.
    std::vector<std::string> words() const;

    bool operator==(const StopWords& other) const { return words_ == other.words_; }

private:
    std::unordered_set<std::string> words_;
};

/// Lowercased maximal runs of alphanumeric characters. Bytes >= 0x80 count
/// as alphanumeric so UTF-8 words stay whole.
std::vector<std::string> tokenize(std::string_view text);

/// Tokens that are pure numbers or a single character.
bool is_enumeration_symbol(std::string_view token) noexcept;

/// Token counts in first-occurrence order, stop words and enumeration
/// symbols removed.
std::vector<KeywordCount> extract_keywords(std::string_view message,
                                           const StopWords& stop_words = StopWords::english());

}  // namespace githru::ingest
