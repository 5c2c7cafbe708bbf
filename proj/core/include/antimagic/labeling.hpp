#pragma once

#include <cstdint>
#include <map>

#include "antimagic/graph.hpp"

namespace antimagic {

// Number of edges of K_n, C(n,2). Rejects n < 0.
std::int64_t pair_count(std::int64_t n);

// Lexicographic rank of (i,j) among all pairs 1 <= i < j <= n:
//   k = (i-1)n - i(i-1)/2 + j - i.
// Rejects invalid pairs and n < 2.
std::int64_t label_index(std::int64_t n, EdgePair pair);

// Inverse of label_index: the unique pair with the given rank.
// Rejects k outside 1..C(n,2).
EdgePair label_inverse(std::int64_t n, std::int64_t k);

// Canonical edge labeling of K_n or a subgraph of it. Every stored label
// equals label_index of its key.
struct LabelAssignment {
    std::int64_t n{};
    std::map<EdgePair, std::int64_t> entries;
};

// Labels all C(n,2) edges of K_n; a bijection onto 1..C(n,2).
// n = 1 yields an empty assignment; n = 0 is rejected.
LabelAssignment label_all(std::int64_t n);

// Labels the edges of a subgraph of K_n with their K_n labels; injective
// into 1..C(n,2) but generally not surjective.
LabelAssignment label_subgraph(const SimpleGraph& g);

}  // namespace antimagic
