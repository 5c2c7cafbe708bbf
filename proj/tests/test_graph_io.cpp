#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "antimagic/edge_list_io.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

using namespace antimagic;

TEST_CASE("complete_graph") {
    CHECK(complete_graph(3).edges == std::vector<EdgePair>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(complete_graph(1).edges.empty());
    CHECK(complete_graph(5).edges.size() == 10);
}

TEST_CASE("canonical_orientation and underlying") {
    auto k3 = complete_graph(3);
    auto d = canonical_orientation(k3);
    CHECK(d.arcs == std::vector<Arc>{{1, 2}, {1, 3}, {2, 3}});

    SimpleGraph path{3, {{1, 2}, {2, 3}}};
    CHECK(canonical_orientation(path).arcs == std::vector<Arc>{{1, 2}, {2, 3}});

    CHECK(canonical_orientation(complete_graph(2)).arcs == std::vector<Arc>{{1, 2}});

    auto k4 = complete_graph(4);
    CHECK(underlying(canonical_orientation(k4)).edges == k4.edges);

    CHECK(underlying(OrientedGraph{3, {{1, 2}, {2, 3}}}).edges ==
          std::vector<EdgePair>{{1, 2}, {2, 3}});
    CHECK(underlying(OrientedGraph{3, {}}).edges.empty());
    CHECK_THROWS_AS(underlying(OrientedGraph{2, {{1, 2}, {2, 1}}}), std::invalid_argument);
}

TEST_CASE("parse_edge_list basics") {
    auto path = parse_edge_list("3 2\n1 2\n2 3\n");
    CHECK_FALSE(path.directed);
    CHECK(path.graph.n == 3);
    CHECK(path.graph.edges == std::vector<EdgePair>{{1, 2}, {2, 3}});
    CHECK_FALSE(path.labeling.has_value());

    auto labeled = parse_edge_list("3 3\n1 2 1\n1 3 2\n2 3 3\n");
    REQUIRE(labeled.labeling.has_value());
    std::map<Arc, std::int64_t> expected;
    for (const auto& [e, k] : label_all(3).entries) expected[{e.i, e.j}] = k;
    CHECK(labeled.labeling->edge_labels == expected);

    auto arc = parse_edge_list("2 1\n2 1\n", /*force_directed=*/true);
    CHECK(arc.directed);
    CHECK(arc.digraph.arcs == std::vector<Arc>{{2, 1}});

    auto marked = parse_edge_list("directed 3 2\n1 3\n3 2\n");
    CHECK(marked.directed);
    CHECK(marked.digraph.arcs == std::vector<Arc>{{1, 3}, {3, 2}});
}

TEST_CASE("parse_edge_list diagnostics carry line numbers") {
    using Catch = std::invalid_argument;
    CHECK_THROWS_AS(parse_edge_list(""), Catch);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), Catch);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 4\n"), Catch);      // out of range
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n1 2\n"), Catch); // duplicate
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), Catch);      // count mismatch
    CHECK_THROWS_AS(parse_edge_list("3 1\n2 2\n"), Catch);      // self-loop
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2 1\n2 3\n"), Catch);  // partial labels

    try {
        parse_edge_list("3 1\n# fine\n1 9\n");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("serialize canonical forms") {
    CHECK(serialize(complete_graph(2)) == "2 1\n1 2\n");
    CHECK(serialize(SimpleGraph{1, {}}) == "1 0\n");

    Labeling lab;
    for (const auto& [e, k] : label_all(3).entries) lab.edge_labels[{e.i, e.j}] = k;
    CHECK(serialize(complete_graph(3), lab) == "3 3\n1 2 1\n1 3 2\n2 3 3\n");
}

TEST_CASE("parse/serialize round trip over a seeded random corpus") {
    std::mt19937 rng(20250823);
    for (int trial = 0; trial < 120; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
        const bool directed = rng() % 2 == 0;
        const bool with_labels = rng() % 2 == 0;

        std::vector<EdgePair> pool;
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = i + 1; j <= n; ++j) pool.push_back({i, j});
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t l = pool.empty() ? 0 : rng() % (pool.size() + 1);
        pool.resize(l);

        std::string text;
        if (directed) {
            OrientedGraph d{n, {}};
            for (const auto& e : pool)
                d.arcs.push_back(rng() % 2 ? Arc{e.i, e.j} : Arc{e.j, e.i});
            std::sort(d.arcs.begin(), d.arcs.end());
            std::optional<Labeling> lab;
            if (with_labels) {
                lab.emplace();
                std::int64_t k = 0;
                for (const auto& a : d.arcs) lab->edge_labels[a] = ++k;
            }
            text = serialize(d, lab);
            auto parsed = parse_edge_list(text);
            CHECK(parsed.directed);
            CHECK(parsed.digraph.n == n);
            CHECK(parsed.digraph.arcs == d.arcs);
            if (with_labels && l > 0)
                CHECK(parsed.labeling->edge_labels == lab->edge_labels);
            CHECK(serialize(parsed.digraph, parsed.labeling) == text);
        } else {
            SimpleGraph g{n, pool};
            std::sort(g.edges.begin(), g.edges.end());
            std::optional<Labeling> lab;
            if (with_labels) {
                lab.emplace();
                std::int64_t k = 0;
                for (const auto& e : g.edges) lab->edge_labels[{e.i, e.j}] = ++k;
            }
            text = serialize(g, lab);
            auto parsed = parse_edge_list(text);
            CHECK_FALSE(parsed.directed);
            CHECK(parsed.graph.n == n);
            CHECK(parsed.graph.edges == g.edges);
            if (with_labels && l > 0)
                CHECK(parsed.labeling->edge_labels == lab->edge_labels);
            CHECK(serialize(parsed.graph, parsed.labeling) == text);
        }
    }
}
