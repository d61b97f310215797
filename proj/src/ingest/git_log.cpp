#include "githru/ingest/git_log.hpp"

#include <charconv>

#include "githru/error.hpp"

namespace githru::ingest {
namespace {

constexpr std::size_t kHeaderFields = 8;

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view raw) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= raw.size()) {
        std::size_t end = raw.find('\n', start);
        if (end == std::string_view::npos) end = raw.size();
        std::string_view line = raw.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number++});
        if (end == raw.size()) break;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split(std::string_view text, std::string_view sep, std::size_t max_parts) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (parts.size() + 1 < max_parts) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) break;
        parts.push_back(text.substr(start, pos - start));
        start = pos + sep.size();
    }
    parts.push_back(text.substr(start));
    return parts;
}

bool parse_u64(std::string_view text, std::uint64_t& out) {
    if (text.empty()) return false;
    for (char c : text)
        if (c < '0' || c > '9') return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_timestamp(std::string_view text, Timestamp& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_count(std::string_view text, std::optional<std::uint64_t>& out) {
    if (text == "-") {
        out.reset();
        return true;
    }
    std::uint64_t v = 0;
    if (!parse_u64(text, v)) return false;
    out = v;
    return true;
}

std::optional<FileChange> parse_numstat(std::string_view line) {
    const std::size_t t1 = line.find('\t');
    if (t1 == std::string_view::npos) return std::nullopt;
    const std::size_t t2 = line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || t2 + 1 >= line.size()) return std::nullopt;
    FileChange fc;
    if (!parse_count(line.substr(0, t1), fc.insertions)) return std::nullopt;
    if (!parse_count(line.substr(t1 + 1, t2 - t1 - 1), fc.deletions)) return std::nullopt;
    // numstat prints "-" for both columns or for neither.
    if (fc.insertions.has_value() != fc.deletions.has_value()) return std::nullopt;
    fc.is_binary = !fc.insertions.has_value();
    fc.path = std::string(line.substr(t2 + 1));
    return fc;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(line_no) + ": " + what);
}

CommitRecord parse_header(const Line& line) {
    const std::string_view body = line.text.substr(kRecordSentinel.size());
    const auto fields = split(body, kFieldSeparator, kHeaderFields);
    if (fields.size() != kHeaderFields) malformed(line.number, "expected 8 fields");

    CommitRecord rec;
    if (!is_object_id(fields[0])) malformed(line.number, "bad commit id");
    rec.id = std::string(fields[0]);

    std::string_view parents = fields[1];
    while (!parents.empty()) {
        const std::size_t sp = parents.find(' ');
        const std::string_view p = parents.substr(0, sp);
        if (!is_object_id(p)) malformed(line.number, "bad parent id");
        rec.parents.emplace_back(p);
        if (sp == std::string_view::npos) break;
        parents.remove_prefix(sp + 1);
    }

    rec.author_name = std::string(fields[2]);
    rec.author_email = std::string(fields[3]);
    if (!parse_timestamp(fields[4], rec.author_date)) malformed(line.number, "bad author date");
    if (!parse_timestamp(fields[5], rec.commit_date)) malformed(line.number, "bad commit date");
    parse_decoration(fields[6], rec.branch_heads, rec.tags);
    rec.message = std::string(fields[7]);
    return rec;
}

// Lines between two headers: message continuation, then the numstat block.
// git separates the two with a blank line only when the message ends in a
// newline, so the trailing run of numstat lines is taken as the block either way.
void finish_record(CommitRecord& rec, std::span<const Line> body) {
    std::size_t end = body.size();
    while (end > 0 && body[end - 1].text.empty()) --end;

    std::size_t stat_begin = end;
    while (stat_begin > 0 && parse_numstat(body[stat_begin - 1].text)) --stat_begin;
    for (std::size_t i = stat_begin; i < end; ++i) rec.file_changes.push_back(*parse_numstat(body[i].text));
    end = stat_begin;
    while (end > 0 && body[end - 1].text.empty()) --end;

    for (std::size_t i = 0; i < end; ++i) {
        rec.message += '\n';
        rec.message += body[i].text;
    }
    while (!rec.message.empty() && (rec.message.back() == '\n' || rec.message.back() == '\r'))
        rec.message.pop_back();
}

}  // namespace

std::vector<std::string> git_log_arguments() {
    return {"log",
            "--all",
            "--date-order",
            "--pretty=format:\xC2\xA7\xC2\xA7%H\xC2\xA7%P\xC2\xA7%an\xC2\xA7%ae\xC2\xA7%ad\xC2\xA7%cd\xC2\xA7%D\xC2\xA7%B",
            "--date=unix",
            "--numstat"};
}

std::vector<std::string> git_tag_arguments() {
    return {"tag", "--format=%(refname:short) %(if)%(*objectname)%(then)%(*objectname)%(else)%(objectname)%(end)"};
}

void parse_decoration(std::string_view decoration, std::vector<std::string>& branches,
                      std::vector<std::string>& tags) {
    while (!decoration.empty()) {
        const std::size_t comma = decoration.find(", ");
        std::string_view item = decoration.substr(0, comma);
        decoration = comma == std::string_view::npos ? std::string_view{} : decoration.substr(comma + 2);

        if (item.starts_with("HEAD -> ")) item.remove_prefix(8);
        if (item.starts_with("tag: ")) {
            tags.emplace_back(item.substr(5));
            continue;
        }
        if (item.empty() || item == "HEAD" || item == "grafted" || item.ends_with("/HEAD")) continue;
        branches.emplace_back(item);
    }
}

std::vector<CommitRecord> parse_git_log(std::string_view raw_log) {
    const auto lines = split_lines(raw_log);
    std::vector<CommitRecord> records;

    std::size_t i = 0;
    while (i < lines.size() && !lines[i].text.starts_with(kRecordSentinel)) {
        if (!lines[i].text.empty()) malformed(lines[i].number, "text before first record");
        ++i;
    }
    while (i < lines.size()) {
        CommitRecord rec = parse_header(lines[i]);
        std::size_t j = i + 1;
        while (j < lines.size() && !lines[j].text.starts_with(kRecordSentinel)) ++j;
        finish_record(rec, std::span<const Line>(lines).subspan(i + 1, j - i - 1));
        records.push_back(std::move(rec));
        i = j;
    }
    return records;
}

std::string write_git_log(std::span<const CommitRecord> records) {
    std::string out;
    bool first = true;
    for (const auto& rec : records) {
        if (!first) out += '\n';
        first = false;
        out += kRecordSentinel;
        out += rec.id;
        out += kFieldSeparator;
        for (std::size_t p = 0; p < rec.parents.size(); ++p) {
            if (p) out += ' ';
            out += rec.parents[p];
        }
        out += kFieldSeparator;
        out += rec.author_name;
        out += kFieldSeparator;
        out += rec.author_email;
        out += kFieldSeparator;
        out += std::to_string(rec.author_date);
        out += kFieldSeparator;
        out += std::to_string(rec.commit_date);
        out += kFieldSeparator;
        std::string deco;
        for (const auto& b : rec.branch_heads) {
            if (!deco.empty()) deco += ", ";
            deco += b;
        }
        for (const auto& t : rec.tags) {
            if (!deco.empty()) deco += ", ";
            deco += "tag: " + t;
        }
        out += deco;
        out += kFieldSeparator;
        out += rec.message;
        out += '\n';
        if (!rec.file_changes.empty()) {
            out += '\n';
            for (const auto& fc : rec.file_changes) {
                out += fc.insertions ? std::to_string(*fc.insertions) : "-";
                out += '\t';
                out += fc.deletions ? std::to_string(*fc.deletions) : "-";
                out += '\t';
                out += fc.path;
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace githru::ingest
