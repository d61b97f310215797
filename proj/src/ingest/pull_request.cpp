#include "githru/ingest/pull_request.hpp"

#include <set>
#include <unordered_set>

#include "githru/error.hpp"
#include "json.hpp"

namespace githru::ingest {

using nlohmann::json;

std::string_view to_string(PrState state) noexcept {
    switch (state) {
        case PrState::Open: return "open";
        case PrState::Closed: return "closed";
        case PrState::Merged: return "merged";
    }
    return "open";
}

std::optional<PrState> parse_pr_state(std::string_view text) noexcept {
    if (text == "open") return PrState::Open;
    if (text == "closed") return PrState::Closed;
    if (text == "merged") return PrState::Merged;
    return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidPrDump, what); }

std::string text_field(const json& obj, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        if (required) invalid(std::string("missing field ") + key);
        return {};
    }
    if (!it->is_string()) invalid(std::string("field ") + key + " must be a string");
    return it->get<std::string>();
}

std::optional<std::string> sha_field(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string() || !is_object_id(it->get<std::string>()))
        invalid(std::string("field ") + key + " must be a 40-char commit id");
    return it->get<std::string>();
}

std::optional<Timestamp> time_field(const json& obj, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        if (required) invalid(std::string("missing field ") + key);
        return std::nullopt;
    }
    if (!it->is_string()) invalid(std::string("field ") + key + " must be an ISO-8601 string");
    auto t = parse_iso8601(it->get<std::string>());
    if (!t) invalid(std::string("field ") + key + " is not ISO-8601: " + it->get<std::string>());
    return t;
}

}  // namespace

std::vector<PullRequest> parse_pr_dump(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        invalid(e.what());
    }
    if (!doc.is_array()) invalid("top level must be an array");

    std::vector<PullRequest> prs;
    for (const auto& obj : doc) {
        if (!obj.is_object()) invalid("entries must be objects");
        PullRequest pr;
        const auto num = obj.find("number");
        if (num == obj.end() || !num->is_number_integer() || num->get<long long>() <= 0)
            invalid("number must be a positive integer");
        pr.number = num->get<int>();
        pr.title = text_field(obj, "title", true);
        pr.body = text_field(obj, "body", false);
        const auto state = parse_pr_state(text_field(obj, "state", true));
        if (!state) invalid("PR #" + std::to_string(pr.number) + ": state must be open, closed or merged");
        pr.state = *state;
        pr.merge_commit_id = sha_field(obj, "merge_commit_sha");
        pr.head_commit_id = sha_field(obj, "head_sha");
        pr.author_name = text_field(obj, "author", false);
        pr.created_at = *time_field(obj, "created_at", true);
        pr.merged_at = time_field(obj, "merged_at", false);

        if (pr.state == PrState::Merged && !pr.merge_commit_id)
            invalid("PR #" + std::to_string(pr.number) + ": merged without merge_commit_sha");
        if (pr.state != PrState::Merged) {
            // GitHub reports a test-merge sha for unmerged PRs; it is not history.
            pr.merge_commit_id.reset();
            pr.merged_at.reset();
        }
        prs.push_back(std::move(pr));
    }
    return prs;
}

std::string write_pr_dump(const std::vector<PullRequest>& prs) {
    json doc = json::array();
    for (const auto& pr : prs) {
        json obj;
        obj["number"] = pr.number;
        obj["title"] = pr.title;
        obj["body"] = pr.body;
        obj["state"] = std::string(to_string(pr.state));
        obj["merge_commit_sha"] = pr.merge_commit_id ? json(*pr.merge_commit_id) : json(nullptr);
        obj["head_sha"] = pr.head_commit_id ? json(*pr.head_commit_id) : json(nullptr);
        obj["author"] = pr.author_name;
        obj["created_at"] = format_iso8601(pr.created_at);
        obj["merged_at"] = pr.merged_at ? json(format_iso8601(*pr.merged_at)) : json(nullptr);
        doc.push_back(std::move(obj));
    }
    return doc.dump(2);
}

PrLinks attach_pull_requests(const std::vector<CommitRecord>& commits, const std::vector<PullRequest>& prs) {
    std::unordered_set<std::string> known;
    known.reserve(commits.size());
    for (const auto& c : commits) known.insert(c.id);

    PrLinks links;
    std::set<int> seen;
    for (const auto& pr : prs) {
        if (!seen.insert(pr.number).second)
            throw Error(ErrorCode::DuplicatePrNumber, "PR #" + std::to_string(pr.number) + " listed twice");
    }
    for (const auto& pr : prs) {
        const std::string tag = "PR #" + std::to_string(pr.number);
        if (pr.state == PrState::Merged) {
            if (known.count(*pr.merge_commit_id))
                links.merge_commit_pr[*pr.merge_commit_id] = pr.number;
            else
                links.warnings.push_back(tag + ": merge commit " + *pr.merge_commit_id + " not in history");
        }
        if (pr.head_commit_id) {
            if (known.count(*pr.head_commit_id))
                links.heads.push_back({pr.number, *pr.head_commit_id, pr.state});
            else if (pr.state != PrState::Merged)
                links.warnings.push_back(tag + ": head commit " + *pr.head_commit_id + " not in history");
        }
    }
    return links;
}

}  // namespace githru::ingest
