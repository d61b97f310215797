#include "githru/service/service.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "githru/analytics/search.hpp"
#include "githru/analytics/summary.hpp"
#include "githru/service/serialize.hpp"

namespace githru::service {

using nlohmann::json;

namespace {

std::vector<std::string> values_of(const QueryParams& query, const std::string& key) {
    std::vector<std::string> out;
    auto [lo, hi] = query.equal_range(key);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    return out;
}

const std::string* last_value(const QueryParams& query, const std::string& key) {
    auto [lo, hi] = query.equal_range(key);
    if (lo == hi) return nullptr;
    return &std::prev(hi)->second;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        if (end > start) out.emplace_back(text.substr(start, end - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

[[noreturn]] void invalid(const std::string& key, const std::string& value) {
    throw Error(ErrorCode::InvalidParams, "invalid value for " + key + ": '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    invalid(key, value);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) invalid(key, value);
        return v;
    } catch (const std::logic_error&) {
        invalid(key, value);
    }
}

Timestamp parse_time(const std::string& key, const std::string& value) {
    Timestamp seconds = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, seconds);
    if (ec == std::errc{} && ptr == end && !value.empty()) return seconds;
    if (auto t = parse_iso8601(value)) return *t;
    invalid(key, value);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_body(const std::string& body) {
    try {
        json j = json::parse(body);
        if (!j.is_object()) throw Error(ErrorCode::InvalidParams, "request body must be a JSON object");
        return j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidParams, std::string("malformed JSON body: ") + e.what());
    }
}

std::string body_string(const json& body, const char* key, bool required) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) {
        if (required) throw Error(ErrorCode::InvalidParams, std::string("missing field ") + key);
        return {};
    }
    if (!it->is_string()) throw Error(ErrorCode::InvalidParams, std::string("field ") + key + " must be a string");
    return it->get<std::string>();
}

/// Graph params from the query string, overridden by a "params" object in the body.
QueryParams merged_query(const Request& request, const json* body) {
    QueryParams query = request.query;
    if (body == nullptr) return query;
    const auto it = body->find("params");
    if (it == body->end()) return query;
    if (!it->is_object()) throw Error(ErrorCode::InvalidParams, "params must be an object");
    for (const auto& [key, value] : it->items()) {
        query.erase(key);
        auto scalar = [&](const json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
            if (v.is_number()) return v.dump();
            throw Error(ErrorCode::InvalidParams, "unsupported value for " + key);
        };
        if (value.is_array()) {
            for (const auto& v : value) query.emplace(key, scalar(v));
        } else {
            query.emplace(key, scalar(value));
        }
    }
    return query;
}

Response error_response(const Error& e) {
    return {status_of(e.code()), {{"error", std::string(to_string(e.code()))}, {"message", e.what()}}};
}

Timestamp now_seconds() {
    using namespace std::chrono;
    return duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
}

std::vector<std::string> path_segments(std::string_view path) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < path.size()) {
        auto slash = path.find('/', start);
        if (slash == std::string_view::npos) slash = path.size();
        if (slash > start) out.emplace_back(path.substr(start, slash - start));
        start = slash + 1;
    }
    return out;
}

}  // namespace

analytics::GraphParams parse_graph_params(const QueryParams& query) {
    analytics::GraphParams params;
    auto& cp = params.clustering;
    if (auto* v = last_value(query, "csm")) params.csm = parse_bool("csm", *v);
    if (auto* v = last_value(query, "threshold")) cp.threshold = parse_double("threshold", *v);
    if (auto* v = last_value(query, "wAuthor")) cp.weights.author = parse_double("wAuthor", *v);
    if (auto* v = last_value(query, "wDate")) cp.weights.date = parse_double("wDate", *v);
    if (auto* v = last_value(query, "wType")) cp.weights.type = parse_double("wType", *v);
    if (auto* v = last_value(query, "wFile")) cp.weights.file = parse_double("wFile", *v);
    if (auto* v = last_value(query, "wMessage")) cp.weights.message = parse_double("wMessage", *v);
    if (auto* v = last_value(query, "releaseSplit")) cp.split_by_release = parse_bool("releaseSplit", *v);
    if (auto* v = last_value(query, "nonConflict")) cp.non_conflict = parse_bool("nonConflict", *v);
    if (auto* v = last_value(query, "horizon")) {
        const double h = parse_double("horizon", *v);
        if (h < 1 || h != static_cast<double>(static_cast<int>(h))) invalid("horizon", *v);
        cp.date_horizon_days = static_cast<int>(h);
    }
    if (auto* v = last_value(query, "from"); v && !v->empty()) params.from = parse_time("from", *v);
    if (auto* v = last_value(query, "to"); v && !v->empty()) params.to = parse_time("to", *v);
    if (auto* v = last_value(query, "stemTypes"); v && !v->empty()) {
        std::set<stemgraph::StemType> types;
        for (const auto& name : split_list(*v)) {
            const auto t = stemgraph::parse_stem_type(name);
            if (!t) invalid("stemTypes", name);
            types.insert(*t);
        }
        params.stem_types = std::move(types);
    }

    const auto texts = values_of(query, "kwText");
    const auto criteria = values_of(query, "kwCriterion");
    const auto modes = values_of(query, "kwMode");
    for (std::size_t i = 0; i < texts.size(); ++i) {
        analytics::KeywordFilter f;
        f.text = texts[i];
        if (i < criteria.size()) {
            const auto c = analytics::parse_keyword_criterion(criteria[i]);
            if (!c) invalid("kwCriterion", criteria[i]);
            f.criterion = *c;
        }
        if (i < modes.size()) {
            const auto m = analytics::parse_filter_mode(modes[i]);
            if (!m) invalid("kwMode", modes[i]);
            f.mode = *m;
        }
        params.keyword_filters.push_back(std::move(f));
    }
    params.validate();
    return params;
}

int status_of(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnknownRepo:
        case ErrorCode::UnknownCluster:
        case ErrorCode::UnknownSelection: return 404;
        case ErrorCode::DuplicateRepo: return 409;
        case ErrorCode::CycleDetected:
        case ErrorCode::DanglingParent:
        case ErrorCode::NotAMerge: return 500;
        default: return 400;
    }
}

Service::Service(std::size_t cache_capacity) : cache_(cache_capacity) {}

void Service::add_snapshot(std::shared_ptr<const AnalysisSnapshot> snapshot) {
    std::unique_lock lock(repos_mutex_);
    const auto& id = snapshot->repo_id();
    if (repos_.count(id)) throw Error(ErrorCode::DuplicateRepo, "repository already ingested: " + id);
    auto repo = std::make_unique<Repo>();
    repo->snapshot = std::move(snapshot);
    repos_.emplace(id, std::move(repo));
}

Service::Repo& Service::repo(const std::string& repo_id) const {
    std::shared_lock lock(repos_mutex_);
    const auto it = repos_.find(repo_id);
    if (it == repos_.end()) throw Error(ErrorCode::UnknownRepo, "unknown repository: " + repo_id);
    return *it->second;
}

std::shared_ptr<const AnalysisSnapshot> Service::snapshot(const std::string& repo_id) const {
    return repo(repo_id).snapshot;
}

std::shared_ptr<const analytics::Graph> Service::graph(const AnalysisSnapshot& snap,
                                                       const analytics::GraphParams& params) {
    const std::string key = snap.repo_id() + '\n' + params.canonical_key();
    if (auto hit = cache_.get(key)) return *hit;
    // Computed outside any lock; concurrent misses on one key both compute equal results.
    auto computed = std::make_shared<const analytics::Graph>(analytics::compute_graph(snap, params));
    cache_.put(key, computed);
    return computed;
}

Response Service::handle(const Request& request) {
    try {
        const auto seg = path_segments(request.path);
        if (seg.size() < 2 || seg[0] != "api" || seg[1] != "repos")
            return {404, {{"error", "NotFound"}, {"message", "no route for " + request.path}}};
        if (seg.size() == 2) {
            if (request.method == "POST") return post_repo(request);
            return {405, {{"error", "MethodNotAllowed"}, {"message", request.method + " " + request.path}}};
        }
        const bool get = request.method == "GET";
        const bool post = request.method == "POST";
        auto& r = repo(seg[2]);
        if (seg.size() == 4) {
            if (get && seg[3] == "graph") return get_graph(r, request);
            if (get && seg[3] == "search") return get_search(r, request);
            if (get && seg[3] == "timeline") return get_timeline(r);
            if (post && seg[3] == "selections") return post_selection(r, request);
            if (post && seg[3] == "compare") return post_compare(r, request);
        }
        if (seg.size() == 5 && get && seg[3] == "clusters" && seg[4] == "summary") return get_summary(r, request);
        if (seg.size() == 6 && get && seg[3] == "clusters" && seg[5] == "detail")
            return get_detail(r, seg[4], request);
        return {404, {{"error", "NotFound"}, {"message", "no route for " + request.method + " " + request.path}}};
    } catch (const Error& e) {
        return error_response(e);
    } catch (const std::exception& e) {
        return {500, {{"error", "Internal"}, {"message", e.what()}}};
    }
}

Response Service::post_repo(const Request& request) {
    const json body = parse_body(request.body);
    const auto repo_id = body_string(body, "repoId", true);
    if (repo_id.empty()) throw Error(ErrorCode::InvalidParams, "repoId must not be empty");
    {
        std::shared_lock lock(repos_mutex_);
        if (repos_.count(repo_id)) throw Error(ErrorCode::DuplicateRepo, "repository already ingested: " + repo_id);
    }
    std::string log = body_string(body, "logText", false);
    if (const auto path = body_string(body, "logPath", false); !path.empty()) log = read_file(path);
    std::string prs;
    if (const auto path = body_string(body, "prPath", false); !path.empty()) prs = read_file(path);
    std::string tags;
    if (const auto path = body_string(body, "tagPath", false); !path.empty()) tags = read_file(path);
    std::string main = body_string(body, "mainBranch", false);
    if (main.empty()) main = "master";

    auto snap = AnalysisSnapshot::build(inputs_from_raw(repo_id, log, prs, tags, main));
    const auto commit_count = snap->dag().size();
    const auto stem_count = snap->raw_stems().size();
    add_snapshot(std::move(snap));
    return {201, {{"repoId", repo_id}, {"commitCount", commit_count}, {"stemCount", stem_count}}};
}

Response Service::get_graph(Repo& repo, const Request& request) {
    const auto params = parse_graph_params(request.query);
    const auto g = graph(*repo.snapshot, params);
    return {200, graph_to_json(*repo.snapshot, *g)};
}

Response Service::get_summary(Repo& repo, const Request& request) {
    const auto params = parse_graph_params(request.query);
    bool by_cloc = false;
    if (auto* v = last_value(request.query, "byCloc")) by_cloc = parse_bool("byCloc", *v);
    std::vector<std::string> ids;
    for (const auto& v : values_of(request.query, "ids"))
        for (auto& id : split_list(v)) ids.push_back(std::move(id));
    const auto g = graph(*repo.snapshot, params);
    return {200, summary_to_json(analytics::grouped_summary(*repo.snapshot, *g, ids, by_cloc))};
}

Response Service::get_detail(Repo& repo, const std::string& cluster_id, const Request& request) {
    const auto params = parse_graph_params(request.query);
    const auto g = graph(*repo.snapshot, params);
    return {200, detail_to_json(analytics::cluster_detail(*repo.snapshot, *g, cluster_id))};
}

Response Service::post_selection(Repo& repo, const Request& request) {
    const json body = parse_body(request.body);
    const auto params = parse_graph_params(merged_query(request, &body));
    const auto name = body_string(body, "name", false);
    std::vector<std::string> ids;
    if (const auto it = body.find("clusterIds"); it != body.end()) {
        if (!it->is_array()) throw Error(ErrorCode::InvalidParams, "clusterIds must be an array");
        for (const auto& id : *it) {
            if (!id.is_string()) throw Error(ErrorCode::InvalidParams, "clusterIds must hold strings");
            ids.push_back(id.get<std::string>());
        }
    }
    const auto g = graph(*repo.snapshot, params);
    std::lock_guard lock(repo.selections_mutex);
    const std::string id = "s" + std::to_string(repo.next_selection);
    auto selection = analytics::capture_selection(*g, id, name, std::move(ids), now_seconds());
    ++repo.next_selection;
    repo.selections.emplace(id, std::move(selection));
    return {201, {{"selectionId", id}}};
}

Response Service::post_compare(Repo& repo, const Request& request) {
    const json body = parse_body(request.body);
    const auto id_a = body_string(body, "selectionA", true);
    const auto id_b = body_string(body, "selectionB", true);
    auto metric = analytics::Metric::CommitCount;
    if (const auto m = body_string(body, "metric", false); !m.empty()) {
        const auto parsed = analytics::parse_metric(m);
        if (!parsed) invalid("metric", m);
        metric = *parsed;
    }
    analytics::Selection a;
    analytics::Selection b;
    {
        std::lock_guard lock(repo.selections_mutex);
        const auto ia = repo.selections.find(id_a);
        if (ia == repo.selections.end()) throw Error(ErrorCode::UnknownSelection, "unknown selection: " + id_a);
        const auto ib = repo.selections.find(id_b);
        if (ib == repo.selections.end()) throw Error(ErrorCode::UnknownSelection, "unknown selection: " + id_b);
        a = ia->second;
        b = ib->second;
    }
    return {200, diff_to_json(analytics::compare(*repo.snapshot, a, b, metric))};
}

Response Service::get_search(Repo& repo, const Request& request) {
    const auto params = parse_graph_params(request.query);
    const auto queries = values_of(request.query, "q");
    const auto g = graph(*repo.snapshot, params);
    const auto ids = analytics::search(*repo.snapshot, *g, queries);
    return {200, {{"blockIds", json(std::vector<std::string>(ids.begin(), ids.end()))}}};
}

Response Service::get_timeline(Repo& repo) { return {200, timeline_json(*repo.snapshot)}; }

}  // namespace githru::service
