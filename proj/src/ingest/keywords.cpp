#include "githru/ingest/keywords.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "githru/error.hpp"

namespace githru::ingest {
namespace detail {
extern const std::string_view kEnglishStopWords;
}

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

}  // namespace

StopWords::StopWords(std::vector<std::string> words) {
    for (auto& w : words) {
        std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) {
            return static_cast<char>(c < 0x80 ? std::tolower(c) : c);
        });
        words_.insert(std::move(w));
    }
}

StopWords StopWords::parse(std::string_view text) {
    std::vector<std::string> words;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (!line.empty() && line.front() != '#') words.emplace_back(line);
        start = end + 1;
    }
    return StopWords(std::move(words));
}

const StopWords& StopWords::english() {
    static const StopWords list = parse(detail::kEnglishStopWords);
    return list;
}

StopWords StopWords::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read stop-word file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

bool StopWords::contains(std::string_view token) const {
    return words_.find(std::string(token)) != words_.end();
}

std::vector<std::string> StopWords::words() const {
    std::vector<std::string> out(words_.begin(), words_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (is_word_byte(c)) {
            current += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

bool is_enumeration_symbol(std::string_view token) noexcept {
    if (token.size() <= 1) return true;
    return std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<KeywordCount> extract_keywords(std::string_view message, const StopWords& stop_words) {
    std::vector<KeywordCount> out;
    std::unordered_map<std::string, std::size_t> position;
    for (auto& token : tokenize(message)) {
        if (is_enumeration_symbol(token) || stop_words.contains(token)) continue;
        auto [it, inserted] = position.try_emplace(token, out.size());
        if (inserted)
            out.push_back({std::move(token), 1});
        else
            ++out[it->second].count;
    }
    return out;
}

}  // namespace githru::ingest
