#include "githru/ingest/tags.hpp"

#include <algorithm>
#include <unordered_map>

#include "githru/error.hpp"

namespace githru::ingest {

std::vector<TagRef> parse_tag_list(std::string_view text) {
    std::vector<TagRef> tags;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        if (line.empty()) continue;
        const std::size_t sp = line.rfind(' ');
        if (sp == std::string_view::npos || sp == 0 || !is_object_id(line.substr(sp + 1)))
            throw Error(ErrorCode::MalformedRecord, "tag list line " + std::to_string(line_no));
        tags.push_back({std::string(line.substr(0, sp)), std::string(line.substr(sp + 1))});
    }
    return tags;
}

std::vector<std::string> apply_tags(std::vector<CommitRecord>& commits, const std::vector<TagRef>& tags) {
    std::unordered_map<std::string, std::size_t> by_id;
    std::unordered_map<std::string, bool> decorated;
    for (std::size_t i = 0; i < commits.size(); ++i) {
        by_id.emplace(commits[i].id, i);
        for (const auto& t : commits[i].tags) decorated[t] = true;
    }
    std::vector<std::string> warnings;
    for (const auto& tag : tags) {
        const auto it = by_id.find(tag.object_id);
        if (it == by_id.end()) {
            if (!decorated.count(tag.name))
                warnings.push_back("tag " + tag.name + " does not resolve to a commit in history");
            continue;
        }
        auto& list = commits[it->second].tags;
        if (std::find(list.begin(), list.end(), tag.name) == list.end()) list.push_back(tag.name);
        decorated[tag.name] = true;
    }
    return warnings;
}

std::vector<TagRef> collect_tags(const std::vector<CommitRecord>& commits) {
    std::vector<TagRef> out;
    for (const auto& c : commits)
        for (const auto& t : c.tags) out.push_back({t, c.id});
    return out;
}

}  // namespace githru::ingest
