#include <algorithm>

#include "doctest.h"
#include "githru/analytics/graph.hpp"
#include "githru/analytics/view.hpp"
#include "githru/error.hpp"
#include "snapshot_fixture.hpp"

using namespace githru;
using namespace githru::analytics;
using namespace githru::testing;

namespace {

std::vector<std::string> stem_names(const View& v) {
    std::vector<std::string> out;
    for (const auto& s : v.stems) out.push_back(s.name);
    return out;
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Io;
}

}  // namespace

TEST_SUITE("analytics") {
    TEST_CASE("toggling squash merge switches between fused and raw stems") {
        const auto h = small_project();
        const auto snap = snapshot_of(h);
        const auto on = toggle_csm(*snap, true);
        const auto off = toggle_csm(*snap, false);
        CHECK(on.csm_enabled);
        CHECK_FALSE(off.csm_enabled);
        CHECK(stem_names(on) == std::vector<std::string>{"master", "experiment"});
        CHECK(off.stems.size() == 4);
        CHECK(on.commit_count(*snap) == h.size());
        CHECK(off.commit_count(*snap) == h.size());
        CHECK(off.node_count() == h.size());
        CHECK(on.node_count() == h.size() - 3);
        CHECK(on.csm_edges.empty());
        CHECK(off.csm_edges.size() == 3);
        const auto m1 = *snap->dag().find(h.id("m1"));
        CHECK(std::count(off.csm_edges.begin(), off.csm_edges.end(),
                         std::pair<CommitIndex, CommitIndex>{m1, *snap->dag().find(h.id("f2"))}) == 1);
    }

    TEST_CASE("fused nodes expose every commit and the fused message") {
        const auto h = small_project();
        const auto snap = snapshot_of(h);
        const auto view = toggle_csm(*snap, true);
        const auto m1 = *snap->dag().find(h.id("m1"));
        const auto& master = view.stems[0];
        const auto it = std::find_if(master.nodes.begin(), master.nodes.end(), [&](const ViewNode& n) { return n.base == m1; });
        REQUIRE(it != master.nodes.end());
        CHECK(it->csm >= 0);
        CHECK(node_commits(*snap, *it).size() == 3);
        CHECK(node_commits(*snap, *it).front() == m1);
        CHECK(node_message(*snap, *it).find("fix crash in lexer") != std::string::npos);
        CHECK(node_features(*snap, *it).commit_count == 3);
    }

    TEST_CASE("temporal filter keeps nodes in range and drops empty stems") {
        const auto snap = snapshot_of(small_project());
        const auto view = filter_temporal(*snap, toggle_csm(*snap, true), kEpoch + 450, kEpoch + 850);
        CHECK(stem_names(view) == std::vector<std::string>{"master"});
        for (const auto& n : view.stems[0].nodes) {
            CHECK(snap->commit(n.base).author_date >= kEpoch + 450);
            CHECK(snap->commit(n.base).author_date <= kEpoch + 850);
        }
        CHECK(view.stems[0].nodes.size() == 3);
        CHECK(code_of([&] { filter_temporal(*snap, toggle_csm(*snap, true), 10, 5); }) == ErrorCode::InvalidRange);
    }

    TEST_CASE("keyword filters match fused sources and compose") {
        const auto snap = snapshot_of(small_project());
        const auto base = toggle_csm(*snap, true);
        const auto bob = filter_keyword(*snap, base, KeywordCriterion::Author, "BOB", FilterMode::Include);
        REQUIRE(bob.node_count() == 1);
        CHECK(snap->commit(bob.stems[0].nodes[0].base).message == "Merge branch fix-lexer");
        const auto no_bob = filter_keyword(*snap, base, KeywordCriterion::Author, "bob", FilterMode::Exclude);
        CHECK(no_bob.node_count() + bob.node_count() == base.node_count());
        const auto files = filter_keyword(*snap, base, KeywordCriterion::File, "parser", FilterMode::Include);
        CHECK(files.node_count() == 2);
        const auto msg = filter_keyword(*snap, files, KeywordCriterion::Message, "refactor", FilterMode::Include);
        CHECK(msg.node_count() == 1);
        const auto types = filter_keyword(*snap, base, KeywordCriterion::Type, "corrective", FilterMode::Include);
        CHECK(types.node_count() >= 1);
        CHECK(code_of([&] { filter_keyword(*snap, base, KeywordCriterion::Message, "", FilterMode::Include); }) ==
              ErrorCode::EmptyKeyword);
    }

    TEST_CASE("stem type filter") {
        const auto snap = snapshot_of(small_project());
        const auto raw = toggle_csm(*snap, false);
        CHECK(stem_names(filter_stem_types(raw, {StemType::Main})) == std::vector<std::string>{"master"});
        CHECK(filter_stem_types(raw, {StemType::Implicit}).stems.size() == 2);
        CHECK(filter_stem_types(raw, {}).stems.empty());
    }

    TEST_CASE("parameter validation") {
        const auto snap = snapshot_of(small_project());
        GraphParams p;
        p.clustering.threshold = 1.5;
        CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParams);
        p = {};
        p.clustering.weights = {0, 0, 0, 0, 0};
        CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParams);
        p = {};
        p.from = 10;
        p.to = 5;
        CHECK(code_of([&] { compute_graph(*snap, p); }) == ErrorCode::InvalidRange);
        p = {};
        p.keyword_filters.push_back({KeywordCriterion::Author, "", FilterMode::Include});
        CHECK(code_of([&] { p.validate(); }) == ErrorCode::EmptyKeyword);
    }

    TEST_CASE("canonical keys separate distinct views") {
        GraphParams a, b;
        CHECK(a.canonical_key() == b.canonical_key());
        b.clustering.threshold = 0.25;
        CHECK(a.canonical_key() != b.canonical_key());
        b = {};
        b.csm = false;
        CHECK(a.canonical_key() != b.canonical_key());
    }

    TEST_CASE("graph clusters cover every view node") {
        const auto snap = snapshot_of(small_project());
        for (double threshold : {0.0, 0.3, 0.7, 1.0}) {
            GraphParams p;
            p.clustering.threshold = threshold;
            const auto g = compute_graph(*snap, p);
            std::size_t covered = 0;
            for (const auto& stem_clusters : g.clusters)
                for (const auto& c : stem_clusters) {
                    covered += c.members.size();
                    CHECK(g.locate(c.id).has_value());
                    CHECK(g.cluster_nodes(c.id).size() == c.members.size());
                }
            CHECK(covered == g.view.node_count());
            if (threshold == 1.0) CHECK(g.cluster_count() == g.view.stems.size());
        }
        GraphParams p;
        const auto g = compute_graph(*snap, p);
        CHECK(code_of([&] { g.cluster_nodes("nope"); }) == ErrorCode::UnknownCluster);
    }
}
