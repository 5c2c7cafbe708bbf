#include <doctest.h>

#include <map>
#include <stdexcept>

#include "antimagic/closed_forms.hpp"
#include "antimagic/labeling.hpp"
#include "oracle.hpp"

using namespace antimagic;

TEST_CASE("in_sum examples") {
    CHECK(in_sum(3, 1) == 0);
    CHECK(in_sum(3, 3) == 5);  // labels of (1,3) and (2,3): 2 + 3
    CHECK(in_sum(4, 3) == 6);  // labels of (1,3) and (2,3): 2 + 4
    CHECK_THROWS_AS(in_sum(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(in_sum(3, 4), std::invalid_argument);
}

TEST_CASE("out_sum examples") {
    CHECK(out_sum(3, 3) == 0);
    CHECK(out_sum(4, 1) == 6);  // 1 + 2 + 3
    CHECK(out_sum(4, 2) == 9);  // labels of (2,3) and (2,4): 4 + 5
}

TEST_CASE("vertex_sum examples") {
    CHECK(vertex_sum(3, 2) == 4);  // incident labels 1 and 3
    CHECK(vertex_sum(3, 1) == 3);
    CHECK(vertex_sum(3, 3) == 5);
    CHECK(vertex_sum(4, 1) == 6);
    CHECK(vertex_sum(4, 1) == out_sum(4, 1));
}

TEST_CASE("oriented_sum examples") {
    CHECK(oriented_sum(3, 1) == -3);
    CHECK(oriented_sum(3, 3) == 5);
    CHECK(oriented_sum(4, 2) == -8);  // 1 - (4 + 5)
}

TEST_CASE("vertex_weight examples") {
    CHECK(vertex_weight(3, 1) == 4);
    CHECK(vertex_weight(3, 3) == 8);
    CHECK(vertex_weight(4, 1) == 7);
}

TEST_CASE("edge_weight examples, including the n=5 collision") {
    CHECK(edge_weight(3, {1, 2}) == 7);
    CHECK(edge_weight(5, {1, 5}) == 15);
    CHECK(edge_weight(5, {2, 3}) == 15);
    CHECK(edge_weight(4, {3, 4}) == 17);
    CHECK_THROWS_AS(edge_weight(4, {4, 3}), std::invalid_argument);
}

TEST_CASE("build_super_total labels vertices 1..n and edges n+k") {
    auto f3 = build_super_total(3);
    CHECK(f3.vertex_labels == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(f3.edge_labels ==
          std::map<Arc, std::int64_t>{{{1, 2}, 4}, {{1, 3}, 5}, {{2, 3}, 6}});

    auto f2 = build_super_total(2);
    CHECK(f2.vertex_labels.size() == 2);
    CHECK(f2.edge_labels.at({1, 2}) == 3);

    CHECK(build_super_total(4).edge_labels.at({2, 4}) == 9);
}

TEST_CASE("closed forms equal direct summation for all vertices") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        auto direct = oracle::direct_sums(n);
        for (std::int64_t i = 1; i <= n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            CHECK(in_sum(n, i) == direct.in[ui]);
            CHECK(out_sum(n, i) == direct.out[ui]);
            CHECK(vertex_sum(n, i) == direct.in[ui] + direct.out[ui]);
            CHECK(oriented_sum(n, i) == direct.in[ui] - direct.out[ui]);
            CHECK(vertex_weight(n, i) == i + direct.in[ui] + direct.out[ui]);
        }
    }
}

TEST_CASE("conservation and monotonicity") {
    for (std::int64_t n = 3; n <= 60; ++n) {
        const std::int64_t N = pair_count(n);
        std::int64_t sum_s = 0, sum_o = 0;
        for (std::int64_t i = 1; i <= n; ++i) {
            sum_s += vertex_sum(n, i);
            sum_o += oriented_sum(n, i);
            if (i > 1) {
                CHECK(vertex_sum(n, i - 1) < vertex_sum(n, i));
                CHECK(in_sum(n, i - 1) < in_sum(n, i));
                CHECK(vertex_weight(n, i - 1) < vertex_weight(n, i));
            }
        }
        CHECK(sum_s == N * (N + 1));
        CHECK(sum_o == 0);
    }
}

TEST_CASE("edge_weight consistency with the rank labeling") {
    for (std::int64_t n = 2; n <= 30; ++n)
        for (const auto& p : oracle::all_pairs(n))
            CHECK(edge_weight(n, p) == p.i + p.j + n + label_index(n, p));
}

TEST_CASE("sums_report") {
    auto r3 = sums_report(3);
    CHECK(r3.closed_vs_direct_ok);
    CHECK(r3.sums_distinct);
    CHECK(r3.rows[0].total_sum == 3);
    CHECK(r3.rows[1].total_sum == 4);
    CHECK(r3.rows[2].total_sum == 5);
    CHECK(r3.rows[0].oriented_sum == -3);
    CHECK(r3.rows[1].oriented_sum == -2);
    CHECK(r3.rows[2].oriented_sum == 5);

    auto r2 = sums_report(2);
    CHECK(r2.rows[0].total_sum == 1);
    CHECK(r2.rows[1].total_sum == 1);
    CHECK_FALSE(r2.sums_distinct);
}
