#include "githru/snapshot.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "githru/error.hpp"
#include "githru/ingest/commit_type.hpp"
#include "githru/ingest/git_log.hpp"
#include "json.hpp"

namespace githru {

using nlohmann::json;

std::uint32_t Interner::intern(std::string_view label) {
    auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
}

std::optional<std::uint32_t> Interner::find(std::string_view label) const {
    const auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

SnapshotInputs inputs_from_raw(std::string repo_id, std::string_view git_log, std::string_view pr_json,
                               std::string_view tag_list, std::string main_branch) {
    SnapshotInputs in;
    in.repo_id = std::move(repo_id);
    in.commits = ingest::parse_git_log(git_log);
    if (!pr_json.empty()) in.prs = ingest::parse_pr_dump(pr_json);
    if (!tag_list.empty()) in.tags = ingest::parse_tag_list(tag_list);
    in.main_branch = std::move(main_branch);
    return in;
}

void annotate_commits(std::vector<ingest::CommitRecord>& commits, const ingest::StopWords& stop_words) {
    for (auto& c : commits) {
        c.commit_type = ingest::classify_commit_type(c.message);
        c.keywords = ingest::extract_keywords(c.message, stop_words);
    }
}

namespace {

clustering::LabelSet sorted_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

NodeFeatures AnalysisSnapshot::features_for(const ingest::CommitRecord& base, std::span<const std::string> coauthors,
                                            const ingest::SparseVector& keywords) {
    NodeFeatures f;
    std::vector<std::uint32_t> authors{authors_.intern(base.author_name)};
    for (const auto& a : coauthors) authors.push_back(authors_.intern(a));
    f.aggregate.authors = sorted_unique(std::move(authors));
    std::vector<std::uint32_t> files;
    for (const auto& fc : base.file_changes) files.push_back(files_.intern(fc.path));
    f.aggregate.files = sorted_unique(std::move(files));
    for (const auto& [token, w] : keywords) f.aggregate.keywords.emplace_back(terms_.intern(token), w);
    std::sort(f.aggregate.keywords.begin(), f.aggregate.keywords.end());
    f.aggregate.first_date = f.aggregate.last_date = base.commit_date;
    f.cloc = base.cloc();
    return f;
}

std::shared_ptr<const AnalysisSnapshot> AnalysisSnapshot::build(SnapshotInputs in) {
    if (in.commits.empty()) throw Error(ErrorCode::EmptyCorpus, "no commits");
    std::shared_ptr<AnalysisSnapshot> snap(new AnalysisSnapshot());
    snap->repo_id_ = std::move(in.repo_id);
    snap->main_branch_ = std::move(in.main_branch);
    snap->created_at_ = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
    if (in.stop_words) {
        snap->stop_words_ = ingest::StopWords(*in.stop_words);
        snap->custom_stop_words_ = true;
    } else {
        snap->stop_words_ = ingest::StopWords::english();
    }
    if (!in.annotated) annotate_commits(in.commits, snap->stop_words_);

    auto tag_warnings = ingest::apply_tags(in.commits, in.tags);
    snap->warnings_.insert(snap->warnings_.end(), tag_warnings.begin(), tag_warnings.end());

    snap->pr_links_ = ingest::attach_pull_requests(in.commits, in.prs);
    snap->warnings_.insert(snap->warnings_.end(), snap->pr_links_.warnings.begin(), snap->pr_links_.warnings.end());
    snap->prs_ = std::move(in.prs);

    auto heads = stemgraph::collect_heads(in.commits, snap->pr_links_);
    snap->dag_ = stemgraph::CommitDag::build(std::move(in.commits), std::move(heads), {.allow_shallow = true});
    for (const auto& id : snap->dag_.shallow_boundary())
        snap->warnings_.push_back("commit " + id + " has parents outside the log (shallow boundary)");

    const auto& dag = snap->dag_;
    snap->raw_stems_ = stemgraph::order_stems(stemgraph::build_stems(dag, snap->main_branch_), dag);
    snap->csm_ = csm::apply_csm(snap->raw_stems_, dag, snap->pr_links_, snap->prs_, snap->stop_words_);
    snap->tfidf_ = ingest::build_tfidf_index(dag.commits());
    const auto tags = ingest::collect_tags(dag.commits());
    snap->releases_ = clustering::detect_releases(tags, dag);

    snap->release_of_.assign(dag.size(), std::nullopt);
    for (const auto& r : snap->releases_) snap->release_of_[*dag.find(r.commit_id)] = r.version;

    snap->plain_.reserve(dag.size());
    for (CommitIndex c = 0; c < dag.size(); ++c) {
        const auto& rec = dag.commit(c);
        NodeFeatures f = snap->features_for(rec, {}, snap->tfidf_.vector_of(rec.id));
        f.aggregate.types = {static_cast<std::uint32_t>(rec.commit_type)};
        f.type_counts[static_cast<std::size_t>(rec.commit_type)] = 1;
        f.release_tag = snap->release_of_[c];
        snap->plain_.push_back(std::move(f));
    }

    std::vector<int> release_rank(dag.size(), -1);
    for (std::size_t r = 0; r < snap->releases_.size(); ++r)
        release_rank[*dag.find(snap->releases_[r].commit_id)] = static_cast<int>(r);
    for (const auto& node : snap->csm_.nodes) {
        const auto& base = dag.commit(node.base);
        NodeFeatures f = snap->features_for(base, node.coauthors, snap->tfidf_.vectorize(node.fused_keywords));
        for (std::size_t t = 0; t < node.type_counts.size(); ++t)
            if (node.type_counts[t] > 0) f.aggregate.types.push_back(static_cast<std::uint32_t>(t));
        f.type_counts = node.type_counts;
        f.commit_count = node.commit_count();
        int best = release_rank[node.base];
        for (CommitIndex s : node.sources) best = std::max(best, release_rank[s]);
        if (best >= 0) f.release_tag = snap->releases_[best].version;
        snap->fused_.push_back(std::move(f));
    }
    return snap;
}

ingest::SparseVector AnalysisSnapshot::term_labels(const clustering::TermVector& v) const {
    ingest::SparseVector out;
    for (const auto& [id, w] : v) out[terms_.label(id)] = w;
    return out;
}

namespace {

json commit_to_json(const ingest::CommitRecord& c) {
    json files = json::array();
    for (const auto& fc : c.file_changes) {
        files.push_back({{"path", fc.path},
                         {"insertions", fc.insertions ? json(*fc.insertions) : json(nullptr)},
                         {"deletions", fc.deletions ? json(*fc.deletions) : json(nullptr)}});
    }
    json keywords = json::array();
    for (const auto& kw : c.keywords) keywords.push_back(json::array({kw.token, kw.count}));
    return {{"id", c.id},
            {"parents", c.parents},
            {"authorName", c.author_name},
            {"authorEmail", c.author_email},
            {"authorDate", c.author_date},
            {"commitDate", c.commit_date},
            {"message", c.message},
            {"files", files},
            {"tags", c.tags},
            {"branches", c.branch_heads},
            {"type", std::string(ingest::to_string(c.commit_type))},
            {"keywords", keywords}};
}

std::optional<std::uint64_t> optional_count(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::uint64_t>();
}

ingest::CommitRecord commit_from_json(const json& j) {
    ingest::CommitRecord c;
    c.id = j.at("id").get<std::string>();
    if (!ingest::is_object_id(c.id)) throw Error(ErrorCode::InvalidSnapshot, "bad commit id " + c.id);
    c.parents = j.at("parents").get<std::vector<std::string>>();
    c.author_name = j.at("authorName").get<std::string>();
    c.author_email = j.at("authorEmail").get<std::string>();
    c.author_date = j.at("authorDate").get<Timestamp>();
    c.commit_date = j.at("commitDate").get<Timestamp>();
    c.message = j.at("message").get<std::string>();
    for (const auto& f : j.at("files")) {
        ingest::FileChange fc;
        fc.path = f.at("path").get<std::string>();
        fc.insertions = optional_count(f.at("insertions"));
        fc.deletions = optional_count(f.at("deletions"));
        fc.is_binary = !fc.insertions && !fc.deletions;
        c.file_changes.push_back(std::move(fc));
    }
    c.tags = j.at("tags").get<std::vector<std::string>>();
    c.branch_heads = j.at("branches").get<std::vector<std::string>>();
    const auto type = ingest::parse_commit_type(j.at("type").get<std::string>());
    if (!type) throw Error(ErrorCode::InvalidSnapshot, "bad commit type on " + c.id);
    c.commit_type = *type;
    for (const auto& kw : j.at("keywords")) c.keywords.push_back({kw.at(0).get<std::string>(), kw.at(1).get<int>()});
    return c;
}

}  // namespace

std::string write_snapshot_file(const AnalysisSnapshot& snap) {
    json commits = json::array();
    for (const auto& c : snap.dag().commits()) commits.push_back(commit_to_json(c));
    json releases = json::array();
    for (const auto& r : snap.releases())
        releases.push_back({{"version", r.version}, {"tag", r.tag}, {"commit", r.commit_id}, {"date", r.date}});
    json doc = {{"version", kSnapshotVersion},
                {"repoId", snap.repo_id()},
                {"mainBranch", snap.main_branch()},
                {"commits", std::move(commits)},
                {"prs", json::parse(ingest::write_pr_dump(snap.prs()))},
                {"releases", std::move(releases)}};
    if (snap.custom_stop_words()) doc["stopWords"] = snap.stop_words().words();
    return doc.dump(1) + "\n";
}

SnapshotInputs read_snapshot_file(std::string_view text) {
    SnapshotInputs in;
    try {
        const json doc = json::parse(text);
        if (!doc.is_object() || doc.value("version", 0) != kSnapshotVersion)
            throw Error(ErrorCode::InvalidSnapshot, "unsupported snapshot version");
        in.repo_id = doc.at("repoId").get<std::string>();
        in.main_branch = doc.at("mainBranch").get<std::string>();
        for (const auto& c : doc.at("commits")) in.commits.push_back(commit_from_json(c));
        in.prs = ingest::parse_pr_dump(doc.at("prs").dump());
        if (doc.contains("stopWords")) in.stop_words = doc.at("stopWords").get<std::vector<std::string>>();
        in.annotated = true;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidSnapshot, e.what());
    }
    return in;
}

}  // namespace githru
