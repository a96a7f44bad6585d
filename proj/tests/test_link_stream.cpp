#include <set>
#include <string>
#include <tuple>

#include "test_support.hpp"

using namespace lsclique;
using namespace support;

TEST_CASE("interval lines parse into canonical links") {
    LinkStream s = make_stream(overlap_stream_text());
    REQUIRE(s.link_count() == 3);
    CHECK(s.vertex_count() == 3);

    // first-appearance interning: a, c, b
    CHECK(s.vertices().find("a") == VertexId{0});
    CHECK(s.vertices().find("c") == VertexId{1});
    CHECK(s.vertices().find("b") == VertexId{2});
    CHECK(s.vertices().label(2) == "b");
    CHECK_FALSE(s.vertices().find("z").has_value());

    // stored order is (begin, u, v); endpoints are canonicalized u < v
    auto links = s.links();
    CHECK(links[0] == Link{1, 5, 0, 1});
    CHECK(links[1] == Link{3, 7, 0, 2});
    CHECK(links[2] == Link{3, 5, 1, 2});
    for (const Link& l : links) CHECK(l.u < l.v);

    CHECK(s.horizon_begin() == 1);
    CHECK(s.horizon_end() == 7);
    CHECK(s.distinct_instant_count() == 4);  // {1,3,5,7}
}

TEST_CASE("instantaneous lines expand by the configured duration") {
    LinkStream s = make_stream("3 a b\n", InputFormat::instantaneous, 2);
    REQUIRE(s.link_count() == 1);
    CHECK(s.links()[0] == Link{3, 5, 0, 1});

    LinkStream zero = make_stream("3 a b\n", InputFormat::instantaneous, 0);
    CHECK(zero.links()[0] == Link{3, 3, 0, 1});
}

TEST_CASE("comments and blank lines are skipped but keep their line numbers") {
    LinkStream s = make_stream("# header\n\n  \t\n1 5 a c\n");
    CHECK(s.link_count() == 1);

    try {
        make_stream("# header\n\n3 7 a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()) == "line 3: expected 4 tokens");
    }
}

TEST_CASE("a file without a trailing newline still parses") {
    LinkStream s = make_stream("1 5 a c");
    CHECK(s.link_count() == 1);
    CHECK(make_stream("").link_count() == 0);
    CHECK(make_stream("\n").link_count() == 0);
}

TEST_CASE("token count errors name the offending line") {
    try {
        make_stream("3 7 a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 1: expected 4 tokens");
    }
    CHECK_THROWS_AS(make_stream("3 7 a b c\n"), ParseError);
    try {
        make_stream("3 a b\n1 c\n", InputFormat::instantaneous);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 2: expected 3 tokens");
    }
}

TEST_CASE("malformed values are rejected with line numbers") {
    CHECK_THROWS_WITH_AS(make_stream("x 4 a b\n"),
                         "line 1: expected a non-negative integer timestamp, got 'x'", ParseError);
    CHECK_THROWS_WITH_AS(make_stream("-1 4 a b\n"),
                         "line 1: expected a non-negative integer timestamp, got '-1'",
                         ParseError);
    CHECK_THROWS_WITH_AS(make_stream("1 4x a b\n"),
                         "line 1: expected a non-negative integer timestamp, got '4x'",
                         ParseError);
    CHECK_THROWS_WITH_AS(make_stream("99999999999999999999 4 a b\n"),
                         "line 1: timestamp out of range: '99999999999999999999'", ParseError);
    CHECK_THROWS_WITH_AS(make_stream("5 4 a b\n"), "line 1: interval ends before it begins",
                         ParseError);
    CHECK_THROWS_WITH_AS(make_stream("1 2 a a\n"), "line 1: self-loop on 'a'", ParseError);
}

TEST_CASE("instantaneous expansion near the horizon limit overflows cleanly") {
    const std::string huge = "9223372036854775807 a b\n";
    CHECK_THROWS_WITH_AS(make_stream(huge, InputFormat::instantaneous, 1),
                         "line 1: timestamp overflow applying duration", ParseError);
    // delta 0 at the limit is fine
    CHECK(make_stream(huge, InputFormat::instantaneous, 0).link_count() == 1);
}

TEST_CASE("same-pair intervals merge when overlapping or touching") {
    SUBCASE("overlap") {
        LinkStream s = make_stream("0 5 a b\n3 9 a b\n");
        REQUIRE(s.link_count() == 1);
        CHECK(s.links()[0] == Link{0, 9, 0, 1});
    }
    SUBCASE("touching endpoints") {
        LinkStream s = make_stream("0 5 a b\n5 9 a b\n");
        REQUIRE(s.link_count() == 1);
        CHECK(s.links()[0] == Link{0, 9, 0, 1});
    }
    SUBCASE("containment") {
        LinkStream s = make_stream("0 9 a b\n2 4 a b\n");
        REQUIRE(s.link_count() == 1);
        CHECK(s.links()[0] == Link{0, 9, 0, 1});
    }
    SUBCASE("disjoint intervals stay separate") {
        LinkStream s = make_stream("0 5 a b\n6 9 a b\n");
        REQUIRE(s.link_count() == 2);
        CHECK(s.links()[0] == Link{0, 5, 0, 1});
        CHECK(s.links()[1] == Link{6, 9, 0, 1});
    }
    SUBCASE("chain of three collapses") {
        LinkStream s = make_stream("4 9 a b\n0 3 a b\n2 5 a b\n");
        REQUIRE(s.link_count() == 1);
        CHECK(s.links()[0] == Link{0, 9, 0, 1});
    }
    SUBCASE("different pairs never merge") {
        LinkStream s = make_stream("0 5 a b\n0 5 a c\n");
        CHECK(s.link_count() == 2);
    }
}

TEST_CASE("normalization sorts links by begin time") {
    LinkStream s = make_stream(nested_stream_text());
    auto links = s.links();
    REQUIRE(links.size() == 4);
    for (std::size_t i = 1; i < links.size(); ++i) CHECK(links[i - 1].begin <= links[i].begin);
    CHECK(links[0].begin == 1);
    CHECK(links[3].begin == 2);
    CHECK(s.distinct_instant_count() == 5);  // {1,2,4,5,11}
}

namespace {

// Interning assigns ids by first appearance, so a reload can permute vertex
// ids; compare streams by their label-level content instead.
std::multiset<std::tuple<Timestamp, Timestamp, std::string, std::string>> labeled_rows(
    const LinkStream& s) {
    std::multiset<std::tuple<Timestamp, Timestamp, std::string, std::string>> rows;
    for (const Link& l : s.links()) {
        std::string a = s.vertices().label(l.u);
        std::string b = s.vertices().label(l.v);
        if (b < a) std::swap(a, b);
        rows.insert({l.begin, l.end, a, b});
    }
    return rows;
}

}  // namespace

TEST_CASE("serialize and reload preserves the stream") {
    for (const char* text : {overlap_stream_text(), nested_stream_text(), shared_triangle_text(),
                             seeded_k4_text(), "0 5 a b\n3 9 a b\n"}) {
        LinkStream s = make_stream(text);
        std::string serialized;
        serialize(s, serialized);
        LinkStream reloaded = make_stream(serialized);
        CHECK(reloaded.link_count() == s.link_count());
        CHECK(reloaded.vertex_count() == s.vertex_count());
        CHECK(reloaded.horizon_begin() == s.horizon_begin());
        CHECK(reloaded.horizon_end() == s.horizon_end());
        CHECK(reloaded.distinct_instant_count() == s.distinct_instant_count());
        CHECK(labeled_rows(reloaded) == labeled_rows(s));
    }
}

TEST_CASE("normalization is reproducible on randomized input") {
    std::mt19937 rng(7);
    for (int round = 0; round < 25; ++round) {
        LinkStream s = random_instantaneous_stream(rng);
        // per-pair intervals are pairwise disjoint and non-touching
        auto links = s.links();
        for (std::size_t i = 0; i < links.size(); ++i) {
            CHECK(links[i].begin <= links[i].end);
            for (std::size_t j = i + 1; j < links.size(); ++j) {
                if (links[i].u != links[j].u || links[i].v != links[j].v) continue;
                Timestamp lo = std::max(links[i].begin, links[j].begin);
                Timestamp hi = std::min(links[i].end, links[j].end);
                CHECK(lo > hi);  // no shared instant
            }
        }
        std::string serialized;
        serialize(s, serialized);
        LinkStream reloaded = make_stream(serialized);
        CHECK(labeled_rows(reloaded) == labeled_rows(s));
    }
}
