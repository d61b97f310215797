#include <cmath>
#include <random>

#include "doctest.h"
#include "githru/error.hpp"
#include "githru/ingest/keywords.hpp"
#include "githru/ingest/tfidf.hpp"
#include "oracles.hpp"

using namespace githru;
using namespace githru::ingest;

namespace {

CommitRecord doc(const std::string& id, const std::string& message) {
    CommitRecord r;
    r.id = id;
    r.message = message;
    r.keywords = extract_keywords(message);
    return r;
}

}  // namespace

TEST_SUITE("ingest") {
    TEST_CASE("ubiquitous term weighs zero") {
        const std::vector<CommitRecord> c = {doc("1", "fix"), doc("2", "fix")};
        const auto idx = build_tfidf_index(c);
        CHECK(idx.document_count() == 2);
        CHECK(idx.document_frequency().at("fix") == 2);
        CHECK(idx.vector_of("1").empty());
        CHECK(idx.vector_of("2").empty());
    }

    TEST_CASE("term in one of two documents weighs ln 2") {
        const std::vector<CommitRecord> c = {doc("1", "parser"), doc("2", "lexer")};
        const auto idx = build_tfidf_index(c);
        CHECK(idx.vector_of("1").at("parser") == doctest::Approx(0.6931).epsilon(1e-4));
        CHECK(std::abs(idx.vector_of("1").at("parser") - std::log(2.0)) < 1e-12);
    }

    TEST_CASE("empty message gives an empty vector") {
        const std::vector<CommitRecord> c = {doc("1", ""), doc("2", "lexer")};
        const auto idx = build_tfidf_index(c);
        CHECK(idx.vector_of("1").empty());
        CHECK(idx.vector_of("unknown").empty());
    }

    TEST_CASE("empty corpus is an error") {
        try {
            (void)build_tfidf_index(std::vector<CommitRecord>{});
            FAIL("expected EmptyCorpus");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyCorpus);
        }
    }

    TEST_CASE("idf and vectorize for tokens outside the corpus") {
        const std::vector<CommitRecord> c = {doc("1", "parser"), doc("2", "lexer"), doc("3", "lexer")};
        const auto idx = build_tfidf_index(c);
        CHECK(idx.idf("lexer") == doctest::Approx(std::log(3.0 / 2.0)));
        CHECK(idx.idf("never") == doctest::Approx(std::log(3.0)));
        const std::vector<KeywordCount> kws = {{"lexer", 2}, {"never", 1}};
        const auto v = idx.vectorize(kws);
        CHECK(v.at("lexer") == doctest::Approx(2 * std::log(1.5)));
        CHECK(v.at("never") == doctest::Approx(std::log(3.0)));
    }

    TEST_CASE("weights match a brute-force count on random corpora") {
        std::mt19937 rng(5);
        const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta", "parser", "crash", "cache", "sync"};
        for (int round = 0; round < 40; ++round) {
            const int n = std::uniform_int_distribution<int>(1, 20)(rng);
            std::vector<CommitRecord> commits;
            std::vector<std::vector<std::string>> docs;
            for (int i = 0; i < n; ++i) {
                const int len = std::uniform_int_distribution<int>(0, 8)(rng);
                std::string msg;
                std::vector<std::string> tokens;
                for (int k = 0; k < len; ++k) {
                    const auto& w = vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)];
                    msg += w + " ";
                    tokens.push_back(w);
                }
                commits.push_back(doc(std::to_string(i), msg));
                docs.push_back(tokens);
            }
            const auto idx = build_tfidf_index(commits);
            const auto expected = oracle::tfidf(docs);
            for (int i = 0; i < n; ++i) {
                const auto& got = idx.vector_of(std::to_string(i));
                REQUIRE(got.size() == expected[i].size());
                for (const auto& [t, w] : expected[i]) CHECK(std::abs(got.at(t) - w) <= 1e-9);
            }
            for (const auto& [t, df] : idx.document_frequency()) CHECK(df <= n);
        }
    }
}
