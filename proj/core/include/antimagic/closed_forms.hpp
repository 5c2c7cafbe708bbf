#pragma once

#include <cstdint>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Closed forms for the canonical labeling of K_n under the low-to-high
// orientation. All evaluations are exact: the cubic forms with fractional
// coefficients are computed as 6-scaled integer numerators with an asserted
// zero remainder. Intermediates are widened to 128 bits; results that do not
// fit in 64 bits are rejected with an overflow error.

// Sum of labels of arcs entering v_i: (n+1)C(i,2) - n(i-1) - i(i-1)(i-2)/6.
std::int64_t in_sum(std::int64_t n, std::int64_t i);

// Sum of labels of arcs leaving v_i: C(n,2) + (n-(i+1))(n(i-1) - C(i,2)).
std::int64_t out_sum(std::int64_t n, std::int64_t i);

// in_sum + out_sum, as the cubic i^3/3 - (n-1)i^2 + (n^2-n-4/3)i - n(n-3)/2.
std::int64_t vertex_sum(std::int64_t n, std::int64_t i);

// in_sum - out_sum, as -(2/3)i^3 + (2n+1)i^2 - (n^2+2n+1/3)i + C(n+1,2).
std::int64_t oriented_sum(std::int64_t n, std::int64_t i);

// i + vertex_sum under the super total labeling f(v_i)=i, f(e_k)=n+k; also
// evaluated as the closed cubic, and the two routes must agree.
std::int64_t vertex_weight(std::int64_t n, std::int64_t i);

// f(v_i)+f(v_j)+f(e) = ni + 2j - C(i,2) under the super total labeling.
std::int64_t edge_weight(std::int64_t n, EdgePair pair);

// The super total labeling itself: vertices 1..n, edge (i,j) gets n + F(i,j).
Labeling build_super_total(std::int64_t n);

struct SumsRow {
    std::int64_t vertex{};
    std::int64_t in_sum{};
    std::int64_t out_sum{};
    std::int64_t total_sum{};
    std::int64_t oriented_sum{};
    std::int64_t vertex_weight{};
};

struct SumsReport {
    std::int64_t n{};
    std::vector<SumsRow> rows;
    bool closed_vs_direct_ok{};  // every closed form equals direct summation
    bool sums_distinct{};        // vertex sums pairwise distinct
};

SumsReport sums_report(std::int64_t n);

}  // namespace antimagic
