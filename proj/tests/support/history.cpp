#include "history.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "githru/ingest/git_log.hpp"
#include "githru/ingest/pull_request.hpp"

namespace githru::testing {

std::string fake_id(std::string_view name) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::string out;
    static constexpr char kHex[] = "0123456789abcdef";
    for (int round = 0; out.size() < 40; ++round) {
        // splitmix64 finalizer over the running state
        std::uint64_t z = h + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(round + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        for (int i = 0; i < 16 && out.size() < 40; ++i) out += kHex[(z >> (i * 4)) & 0xf];
    }
    return out;
}

HistoryBuilder& HistoryBuilder::commit(const std::string& name, std::vector<std::string> parents, Timestamp date,
                                       std::string message, std::string author,
                                       std::vector<ingest::FileChange> files) {
    if (ids_.count(name)) throw std::logic_error("duplicate commit name " + name);
    ingest::CommitRecord r;
    r.id = fake_id(name);
    for (const auto& p : parents) r.parents.push_back(id(p));
    r.author_name = author;
    r.author_email = author + "@example.com";
    r.author_date = date;
    r.commit_date = date;
    r.message = message.empty() ? "commit " + name : std::move(message);
    r.file_changes = std::move(files);
    ids_[name] = r.id;
    position_[name] = commits_.size();
    commits_.push_back(std::move(r));
    return *this;
}

HistoryBuilder& HistoryBuilder::branch(const std::string& branch_name, const std::string& commit_name) {
    (void)id(commit_name);
    branches_[branch_name] = commit_name;
    return *this;
}

HistoryBuilder& HistoryBuilder::tag(const std::string& tag_name, const std::string& commit_name) {
    (void)id(commit_name);
    tags_[tag_name] = commit_name;
    return *this;
}

const std::string& HistoryBuilder::id(const std::string& name) const {
    const auto it = ids_.find(name);
    if (it == ids_.end()) throw std::logic_error("unknown commit name " + name);
    return it->second;
}

std::vector<ingest::CommitRecord> HistoryBuilder::records() const {
    std::vector<ingest::CommitRecord> out = commits_;
    for (const auto& [b, c] : branches_) out[position_.at(c)].branch_heads.push_back(b);
    for (const auto& [t, c] : tags_) out[position_.at(c)].tags.push_back(t);
    std::reverse(out.begin(), out.end());
    // Newest first; insertion order (reversed) breaks ties so children precede parents.
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.commit_date > b.commit_date; });
    return out;
}

std::vector<ingest::TagRef> HistoryBuilder::tag_refs() const {
    std::vector<ingest::TagRef> out;
    for (const auto& [t, c] : tags_) out.push_back({t, id(c)});
    return out;
}

std::string HistoryBuilder::log() const {
    const auto r = records();
    return ingest::write_git_log(r);
}

std::string HistoryBuilder::fast_import_stream() const {
    std::ostringstream s;
    std::map<std::string, std::size_t> mark;
    std::vector<std::string> names(commits_.size());
    for (const auto& [name, pos] : position_) names[pos] = name;
    for (std::size_t i = 0; i < commits_.size(); ++i) mark[commits_[i].id] = i + 1;

    for (std::size_t i = 0; i < commits_.size(); ++i) {
        const auto& c = commits_[i];
        s << "commit refs/heads/master\n";
        s << "mark :" << i + 1 << "\n";
        s << "author " << c.author_name << " <" << c.author_email << "> " << c.author_date << " +0000\n";
        s << "committer " << c.author_name << " <" << c.author_email << "> " << c.commit_date << " +0000\n";
        s << "data " << c.message.size() << "\n" << c.message << "\n";
        if (c.parents.empty()) {
            s << "deleteall\n";
        } else {
            s << "from :" << mark.at(c.parents[0]) << "\n";
            for (std::size_t p = 1; p < c.parents.size(); ++p) s << "merge :" << mark.at(c.parents[p]) << "\n";
        }
        for (const auto& fc : c.file_changes) {
            std::string content;
            if (fc.is_binary) {
                content = std::string("\x89PNG\0\0\x01", 7) + names[i];
            } else {
                // Fresh content each time: the line count is what the numstat will report.
                const auto lines = std::max<std::uint64_t>(1, fc.insertions.value_or(1));
                for (std::uint64_t l = 0; l < lines; ++l) content += names[i] + " line " + std::to_string(l) + "\n";
            }
            s << "M 100644 inline " << fc.path << "\n";
            s << "data " << content.size() << "\n" << content << "\n";
        }
        s << "\n";
    }
    for (const auto& [b, c] : branches_) s << "reset refs/heads/" << b << "\nfrom :" << position_.at(c) + 1 << "\n\n";
    for (const auto& [t, c] : tags_) s << "reset refs/tags/" << t << "\nfrom :" << position_.at(c) + 1 << "\n\n";
    return s.str();
}

namespace {

const std::vector<std::string>& vocabulary() {
    static const std::vector<std::string> words = {
        "fix",      "bug",     "crash",     "add",      "feature", "implement", "support", "refactor",
        "cleanup",  "rename",  "optimize",  "docs",     "readme",  "release",   "version", "parser",
        "realm",    "query",   "schema",    "migration", "sync",   "thread",    "cache",   "android",
        "kotlin",   "object",  "proxy",     "gradle",   "build",   "test",      "native",  "core",
        "listener", "results", "transaction", "notifier", "encryption", "annotation", "model", "error"};
    return words;
}

std::string random_message(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, vocabulary().size() - 1);
    std::string msg;
    const auto n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (i) msg += i == 2 ? " the " : " ";
        msg += vocabulary()[pick(rng)];
    }
    return msg;
}

std::vector<ingest::FileChange> random_files(std::mt19937_64& rng, std::size_t pool) {
    static const std::vector<std::string> dirs = {"", "src/", "src/main/", "src/test/", "docs/", "lib/core/"};
    std::uniform_int_distribution<std::size_t> count(0, 4);
    std::uniform_int_distribution<std::size_t> file(0, pool - 1);
    std::uniform_int_distribution<std::uint64_t> lines(0, 40);
    std::uniform_int_distribution<int> binary(0, 29);
    std::vector<ingest::FileChange> out;
    const auto n = count(rng);
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const auto f = file(rng);
        std::string path = dirs[f % dirs.size()] + "file" + std::to_string(f) + (f % 7 == 0 ? ".png" : ".java");
        if (std::find(seen.begin(), seen.end(), path) != seen.end()) continue;
        seen.push_back(path);
        if (f % 7 == 0 && binary(rng) < 10) {
            out.push_back(binary_change(path));
        } else {
            out.push_back(change(path, lines(rng) + 1, lines(rng)));
        }
    }
    return out;
}

}  // namespace

RandomHistory random_history(std::uint64_t seed, const RandomHistoryOptions& o) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> commits_dist(o.min_commits, std::max(o.min_commits, o.max_commits));
    const std::size_t target = commits_dist(rng);
    std::uniform_int_distribution<std::size_t> branches_dist(1, std::max<std::size_t>(1, o.max_branches));
    const std::size_t branch_target = branches_dist(rng);
    std::uniform_int_distribution<std::size_t> author(0, o.author_pool - 1);
    std::uniform_int_distribution<int> gap(o.tie_dates ? 0 : 1, 7200);

    RandomHistory out;
    auto& h = out.history;
    struct Tip {
        std::string branch;
        std::string commit;
    };
    std::vector<Tip> tips;
    std::vector<std::string> names;
    Timestamp date = kEpoch;
    std::size_t created_branches = 1;

    auto add = [&](std::vector<std::string> parents) {
        const std::string name = "c" + std::to_string(names.size());
        date += gap(rng);
        h.commit(name, std::move(parents), date, random_message(rng), "dev" + std::to_string(author(rng)),
                 random_files(rng, o.file_pool));
        names.push_back(name);
        return name;
    };

    tips.push_back({"master", add({})});
    while (names.size() < target) {
        const double r = unit(rng);
        std::uniform_int_distribution<std::size_t> pick_tip(0, tips.size() - 1);
        if (r < o.branch_probability && created_branches < branch_target) {
            // Fork from a recent commit, sometimes not a tip (as after a pull race).
            std::uniform_int_distribution<std::size_t> back(0, std::min<std::size_t>(names.size() - 1, 20));
            const auto& base = names[names.size() - 1 - back(rng)];
            const std::string bname = "b" + std::to_string(created_branches++);
            tips.push_back({bname, add({base})});
        } else if (r < o.branch_probability + o.merge_probability && tips.size() > 1) {
            const auto t = pick_tip(rng);
            auto s = pick_tip(rng);
            if (s == t) s = (s + 1) % tips.size();
            std::vector<std::string> parents = {tips[t].commit, tips[s].commit};
            if (tips.size() > 2 && unit(rng) < o.octopus_probability) {
                auto third = pick_tip(rng);
                if (third != t && third != s) parents.push_back(tips[third].commit);
            }
            tips[t].commit = add(parents);
            // Merged branches are often deleted, or keep going after the merge.
            if (tips[s].branch != "master" && unit(rng) < 0.5) tips.erase(tips.begin() + static_cast<std::ptrdiff_t>(s));
        } else {
            auto& tip = tips[pick_tip(rng)];
            tip.commit = add({tip.commit});
        }
    }

    for (const auto& tip : tips) {
        if (tip.branch != "master" && unit(rng) < o.drop_ref_probability) continue;
        h.branch(tip.branch, tip.commit);
        out.branch_names.push_back(tip.branch);
    }

    // PRs over merges (merged), and over other tips (open / closed).
    std::vector<std::size_t> merges;
    const auto records = h.records();
    std::map<std::string, const ingest::CommitRecord*> by_id;
    for (const auto& rec : records) by_id[rec.id] = &rec;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (by_id.at(h.id(names[i]))->is_merge()) merges.push_back(i);
    for (std::size_t k = 0; k < o.pr_count; ++k) {
        ingest::PullRequest pr;
        pr.number = static_cast<int>(100 + k);
        pr.title = "PR " + random_message(rng);
        pr.body = random_message(rng);
        pr.author_name = "dev" + std::to_string(author(rng));
        pr.created_at = kEpoch;
        const bool merged = !merges.empty() && k % 3 != 2;
        if (merged) {
            const auto m = merges[(k * 7919) % merges.size()];
            const auto* rec = by_id.at(h.id(names[m]));
            pr.state = ingest::PrState::Merged;
            pr.merge_commit_id = rec->id;
            pr.head_commit_id = rec->parents[1];
            pr.merged_at = rec->commit_date;
        } else {
            pr.state = k % 2 ? ingest::PrState::Closed : ingest::PrState::Open;
            pr.head_commit_id = h.id(names[(k * 104729) % names.size()]);
        }
        out.prs.push_back(std::move(pr));
    }
    // Merged PRs must not share a merge commit.
    std::map<std::string, int> seen_merge;
    std::vector<ingest::PullRequest> unique;
    for (auto& pr : out.prs) {
        if (pr.merge_commit_id && seen_merge.count(*pr.merge_commit_id)) continue;
        if (pr.merge_commit_id) seen_merge[*pr.merge_commit_id] = pr.number;
        unique.push_back(std::move(pr));
    }
    out.prs = std::move(unique);
    return out;
}

SyntheticRepo synthetic_project(std::size_t commits, std::size_t branches, std::size_t releases, std::size_t prs,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> author(0, 11);
    std::uniform_int_distribution<int> gap(60, 4 * 3600);

    SyntheticRepo out;
    auto& h = out.history;
    struct Tip {
        std::string branch;
        std::string commit;
        bool open = true;
    };
    std::vector<Tip> tips;
    std::vector<std::string> names;
    std::vector<std::string> master_commits;
    Timestamp date = kEpoch;
    struct Merge {
        std::string merge;
        std::string head;
        std::string branch;
    };
    std::vector<Merge> merged;

    auto add = [&](std::vector<std::string> parents, std::size_t tip_index) {
        const std::string name = "r" + std::to_string(names.size());
        date += gap(rng);
        h.commit(name, std::move(parents), date, random_message(rng), "dev" + std::to_string(author(rng)),
                 random_files(rng, 80));
        names.push_back(name);
        if (tips[tip_index].branch == "master") master_commits.push_back(name);
        tips[tip_index].commit = name;
        return name;
    };

    tips.push_back({"master", {}});
    {
        const std::string name = "r0";
        h.commit(name, {}, date, "initial import", "dev0", {change("README.md", 10, 0)});
        names.push_back(name);
        master_commits.push_back(name);
        tips[0].commit = name;
    }
    std::size_t next_branch = 1;
    const std::size_t merges_wanted = prs;  // enough merges to back the merged PRs
    while (names.size() < commits) {
        const std::size_t remaining = commits - names.size();
        const std::size_t branches_left = branches - next_branch;
        std::vector<std::size_t> open;
        for (std::size_t i = 1; i < tips.size(); ++i)
            if (tips[i].open) open.push_back(i);
        const double r = unit(rng);
        if (branches_left > 0 && (r < 0.06 || remaining <= branches_left * 3)) {
            tips.push_back({"feature-" + std::to_string(next_branch++), {}});
            add({tips[0].commit}, tips.size() - 1);
        } else if (!open.empty() && (r < 0.16 || (merged.size() < merges_wanted && remaining < 200))) {
            const auto s = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
            const std::string head = tips[s].commit;
            const auto m = add({tips[0].commit, head}, 0);
            merged.push_back({m, head, tips[s].branch});
            tips[s].open = unit(rng) < 0.3;
        } else if (!open.empty() && r < 0.55) {
            const auto s = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
            add({tips[s].commit}, s);
        } else {
            add({tips[0].commit}, 0);
        }
    }
    for (const auto& t : tips) h.branch(t.branch, t.commit);

    // Releases spread over the master history; the first and last tags are
    // an unrelated marker and a pre-release that are not semantic versions.
    for (std::size_t k = 0; k < releases; ++k) {
        const auto at = master_commits[(k + 1) * (master_commits.size() - 1) / (releases + 1)];
        h.tag("v" + std::to_string(k / 2 + 1) + "." + std::to_string(k % 2 * 5) + ".0", at);
    }
    h.tag("nightly", master_commits.back());

    const auto records = h.records();
    std::map<std::string, const ingest::CommitRecord*> by_id;
    for (const auto& r : records) by_id[r.id] = &r;
    for (std::size_t k = 0; k < prs; ++k) {
        ingest::PullRequest pr;
        pr.number = static_cast<int>(4000 + k * 17);
        pr.title = "Pull request " + random_message(rng);
        pr.body = "This change " + random_message(rng);
        pr.author_name = "dev" + std::to_string(author(rng));
        pr.created_at = kEpoch + static_cast<Timestamp>(k) * 3600;
        if (k < prs * 6 / 10 && k < merged.size()) {
            const auto& m = merged[merged.size() - 1 - k];
            pr.state = ingest::PrState::Merged;
            pr.merge_commit_id = h.id(m.merge);
            pr.head_commit_id = h.id(m.head);
            pr.merged_at = by_id.at(h.id(m.merge))->commit_date;
        } else {
            pr.state = k % 2 ? ingest::PrState::Open : ingest::PrState::Closed;
            pr.head_commit_id = h.id(tips[1 + k % (tips.size() - 1)].commit);
        }
        out.prs.push_back(std::move(pr));
    }

    out.log = h.log();
    out.pr_json = ingest::write_pr_dump(out.prs);
    for (const auto& t : h.tag_refs()) out.tag_list += t.name + " " + t.object_id + "\n";
    return out;
}

HistoryBuilder linear_fixture(std::size_t n) {
    HistoryBuilder h;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> parents;
        if (i) parents.push_back("l" + std::to_string(i - 1));
        h.commit("l" + std::to_string(i), parents, kEpoch + static_cast<Timestamp>(i) * 60,
                 "add step " + std::to_string(i), "alice", {change("src/step" + std::to_string(i) + ".c", i + 1, 0)});
    }
    h.branch("master", "l" + std::to_string(n - 1));
    return h;
}

HistoryBuilder branch_merge_fixture(bool name_feature_branch) {
    HistoryBuilder h;
    h.commit("a", {}, kEpoch, "initial import", "alice", {change("README.md", 5, 0)});
    h.commit("b", {"a"}, kEpoch + 100, "add parser", "alice", {change("src/parser.c", 30, 0)});
    h.commit("d", {"a"}, kEpoch + 200, "fix crash in lexer", "bob", {change("src/lexer.c", 3, 1)});
    h.commit("m", {"b", "d"}, kEpoch + 300, "Merge branch feat", "alice");
    h.branch("master", "m");
    if (name_feature_branch) h.branch("feat", "d");
    return h;
}

HistoryBuilder diamond_fixture() {
    HistoryBuilder h;
    h.commit("a", {}, kEpoch, "initial import", "alice", {change("README.md", 5, 0)});
    h.commit("b", {"a"}, kEpoch + 100, "add core", "alice", {change("src/core.c", 20, 0)});
    h.commit("d", {"a"}, kEpoch + 200, "fix shared bug", "carol", {change("src/shared.c", 2, 2)});
    h.commit("m1", {"b", "d"}, kEpoch + 300, "Merge shared fix into master", "alice");
    h.commit("c", {"a"}, kEpoch + 400, "add dev tooling", "dave", {change("tools/dev.sh", 8, 0)});
    h.commit("m2", {"c", "d"}, kEpoch + 500, "Merge shared fix into dev", "dave");
    h.branch("master", "m1");
    h.branch("dev", "m2");
    return h;
}

HistoryBuilder alternating_fixture(std::size_t n) {
    HistoryBuilder h;
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = kEpoch + static_cast<Timestamp>(2 * i) * 60;
        std::vector<std::string> mp;
        if (i) mp.push_back("m" + std::to_string(i - 1));
        h.commit("m" + std::to_string(i), mp, t, "add main part", "alice", {change("main.c", 1, 0)});
        std::vector<std::string> sp = {i ? "s" + std::to_string(i - 1) : "m0"};
        h.commit("s" + std::to_string(i), sp, t + 60, "add side part", "bob", {change("side.c", 1, 0)});
    }
    h.branch("master", "m" + std::to_string(n - 1));
    h.branch("side", "s" + std::to_string(n - 1));
    return h;
}

}  // namespace githru::testing
