#include "doctest.h"
#include "githru/error.hpp"
#include "githru/ingest/tags.hpp"
#include "history.hpp"

using namespace githru;
using namespace githru::ingest;

TEST_SUITE("ingest") {
    TEST_CASE("tag list parsing") {
        const std::string a(40, 'a'), b(40, 'b');
        const auto tags = parse_tag_list("v1.0.0 " + a + "\nnightly " + b + "\n\n");
        CHECK(tags == std::vector<TagRef>{{"v1.0.0", a}, {"nightly", b}});
        CHECK(parse_tag_list("").empty());
        CHECK_THROWS_AS((void)parse_tag_list("lonely\n"), Error);
    }

    TEST_CASE("tags attach to their commits") {
        const auto h = testing::linear_fixture(3);
        auto records = h.records();
        const auto warnings = apply_tags(records, {{"v0.1.0", h.id("l1")}, {"gone", std::string(40, 'f')}});
        CHECK(warnings.size() == 1);
        bool found = false;
        for (const auto& r : records)
            if (r.id == h.id("l1")) found = r.tags == std::vector<std::string>{"v0.1.0"};
        CHECK(found);
        // Applying twice does not duplicate.
        (void)apply_tags(records, {{"v0.1.0", h.id("l1")}});
        CHECK(collect_tags(records) == std::vector<TagRef>{{"v0.1.0", h.id("l1")}});
    }
}
