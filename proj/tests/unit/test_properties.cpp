#include <set>

#include "doctest.h"
#include "git_repo.hpp"
#include "githru/analytics/graph.hpp"
#include "history.hpp"
#include "oracles.hpp"
#include "snapshot_fixture.hpp"

using namespace githru;
using namespace githru::testing;

namespace {

std::vector<std::vector<std::string>> stem_ids(const AnalysisSnapshot& snap, const std::vector<stemgraph::Stem>& stems) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : stems) {
        out.emplace_back();
        for (auto c : s.commits) out.back().push_back(snap.commit(c).id);
    }
    return out;
}

std::string head_of(const std::vector<ingest::CommitRecord>& records, const std::string& branch) {
    for (const auto& r : records)
        for (const auto& b : r.branch_heads)
            if (b == branch) return r.id;
    return {};
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("random histories partition into first-parent stems") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const auto rh = random_history(seed, {.min_commits = 20, .max_commits = 150});
            const auto records = rh.history.records();
            const auto snap = snapshot_of(rh.history, rh.prs);
            CHECK_MESSAGE(oracle::check_stem_partition(records, stem_ids(*snap, snap->raw_stems())) == "", seed);
            // The main stem is master's first-parent chain.
            const auto chain = oracle::first_parent_chain(records, head_of(records, "master"));
            CHECK(stem_ids(*snap, snap->raw_stems())[0] == chain);
        }
    }

    TEST_CASE("squash merge conserves commits") {
        for (std::uint64_t seed = 30; seed <= 50; ++seed) {
            const auto rh = random_history(seed, {.min_commits = 20, .max_commits = 150, .pr_count = 4});
            const auto snap = snapshot_of(rh.history, rh.prs);
            const auto view = analytics::toggle_csm(*snap, true);
            CHECK(view.commit_count(*snap) == snap->dag().size());
            std::set<CommitIndex> seen;
            for (const auto& s : view.stems)
                for (const auto& n : s.nodes)
                    for (auto c : analytics::node_commits(*snap, n)) CHECK(seen.insert(c).second);
            CHECK(seen.size() == snap->dag().size());
            CHECK(snap->csm().stems[0].commits == snap->raw_stems()[0].commits);
        }
    }

    TEST_CASE("snapshot round trip preserves the exported graph") {
        for (std::uint64_t seed = 60; seed <= 65; ++seed) {
            const auto rh = random_history(seed, {.min_commits = 10, .max_commits = 80, .pr_count = 3});
            const auto snap = snapshot_of(rh.history, rh.prs);
            const auto again = AnalysisSnapshot::build(read_snapshot_file(write_snapshot_file(*snap)));
            analytics::GraphParams p;
            const auto a = analytics::compute_graph(*snap, p);
            const auto b = analytics::compute_graph(*again, p);
            REQUIRE(a.layout.blocks.size() == b.layout.blocks.size());
            for (std::size_t i = 0; i < a.layout.blocks.size(); ++i) CHECK(a.layout.blocks[i].id == b.layout.blocks[i].id);
        }
    }

    TEST_CASE("cluster counts never grow as the threshold rises") {
        for (std::uint64_t seed = 70; seed <= 80; ++seed) {
            const auto rh = random_history(seed, {.min_commits = 30, .max_commits = 120});
            const auto snap = snapshot_of(rh.history);
            std::size_t previous = SIZE_MAX;
            for (int step = 0; step <= 10; ++step) {
                analytics::GraphParams p;
                p.clustering.threshold = step / 10.0;
                const auto count = analytics::compute_graph(*snap, p).cluster_count();
                CHECK_MESSAGE(count <= previous, "seed " << seed << " step " << step);
                previous = count;
            }
        }
    }

    TEST_CASE("main stem matches git first-parent on the named fixtures") {
        if (!git_available()) return;
        const std::vector<std::pair<std::string, HistoryBuilder>> fixtures = {
            {"linear", linear_fixture(6)},
            {"branch", branch_merge_fixture(true)},
            {"diamond", diamond_fixture()},
            {"alternating", alternating_fixture(4)}};
        for (const auto& [name, h] : fixtures) {
            const auto dir = make_temp_dir("githru-prop") + "/" + name;
            create_git_repo(dir, h);
            const auto snap = AnalysisSnapshot::build(inputs_from_raw(name, git_pinned_log(dir), "", git_tag_list(dir)));
            CHECK_MESSAGE(stem_ids(*snap, snap->raw_stems())[0] == git_first_parent(dir, "master"), name);
        }
    }
}
