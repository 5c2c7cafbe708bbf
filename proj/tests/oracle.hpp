#pragma once

// Test-only oracles, independent of the library's closed forms: plain
// enumeration and direct summation. Everything here is deliberately the slow,
// obviously-correct route.

#include <cstdint>
#include <map>
#include <vector>

#include "antimagic/graph.hpp"

namespace oracle {

// All pairs (i,j), 1 <= i < j <= n, in lexicographic order.
inline std::vector<antimagic::EdgePair> all_pairs(std::int64_t n) {
    std::vector<antimagic::EdgePair> out;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

// 1-based lexicographic rank of a pair, by enumeration.
inline std::int64_t lex_rank(std::int64_t n, antimagic::EdgePair p) {
    std::int64_t rank = 0;
    for (const auto& q : all_pairs(n)) {
        ++rank;
        if (q == p) return rank;
    }
    return -1;
}

struct DirectSums {
    std::vector<std::int64_t> in;   // index 1..n
    std::vector<std::int64_t> out;  // index 1..n
};

// Direct summation of the rank labeling over the low-to-high orientation.
inline DirectSums direct_sums(std::int64_t n) {
    DirectSums s{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0),
                 std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)};
    std::int64_t k = 0;
    for (const auto& p : all_pairs(n)) {
        ++k;
        s.out[static_cast<std::size_t>(p.i)] += k;
        s.in[static_cast<std::size_t>(p.j)] += k;
    }
    return s;
}

// Edge weights i + j + n + rank under the super total labeling, grouped by
// weight.
inline std::map<std::int64_t, std::vector<antimagic::EdgePair>> weight_groups(std::int64_t n) {
    std::map<std::int64_t, std::vector<antimagic::EdgePair>> groups;
    std::int64_t k = 0;
    for (const auto& p : all_pairs(n)) {
        ++k;
        groups[p.i + p.j + n + k].push_back(p);
    }
    return groups;
}

}  // namespace oracle
