#include "antimagic/labeling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace antimagic {

namespace {

void require_order(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("order: n must be >= 2, got " + std::to_string(n));
}

void require_pair(std::int64_t n, EdgePair p) {
    if (p.i < 1 || p.i >= p.j || p.j > n)
        throw std::invalid_argument("invalid pair (" + std::to_string(p.i) + "," +
                                    std::to_string(p.j) + ") for n=" + std::to_string(n));
}

}  // namespace

std::int64_t pair_count(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("pair_count: n must be >= 0");
    return n * (n - 1) / 2;
}

std::int64_t label_index(std::int64_t n, EdgePair p) {
    require_order(n);
    require_pair(n, p);
    return (p.i - 1) * n - p.i * (p.i - 1) / 2 + p.j - p.i;
}

EdgePair label_inverse(std::int64_t n, std::int64_t k) {
    require_order(n);
    const std::int64_t total = pair_count(n);
    if (k < 1 || k > total)
        throw std::invalid_argument("label " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(total));
    // Row i starts at F(i,i+1) = (i-1)n - C(i,2) + 1. Solve the quadratic
    // bound approximately, then fix up by at most one step in either
    // direction; rounded square roots are never trusted.
    auto row_start = [n](std::int64_t i) { return (i - 1) * n - i * (i - 1) / 2 + 1; };
    double disc = (2.0 * n - 1) * (2.0 * n - 1) - 8.0 * (k - 1);
    std::int64_t i = static_cast<std::int64_t>((2.0 * n - 1 - std::sqrt(disc < 0 ? 0 : disc)) / 2.0) + 1;
    if (i < 1) i = 1;
    if (i > n - 1) i = n - 1;
    while (i > 1 && row_start(i) > k) --i;
    while (i < n - 1 && row_start(i + 1) <= k) ++i;
    const std::int64_t j = i + (k - row_start(i)) + 1;
    return {i, j};
}

LabelAssignment label_all(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("label_all: n must be >= 1");
    LabelAssignment out{n, {}};
    if (n == 1) return out;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j) out.entries[{i, j}] = label_index(n, {i, j});
    return out;
}

LabelAssignment label_subgraph(const SimpleGraph& g) {
    if (g.n < 1) throw std::invalid_argument("label_subgraph: n must be >= 1");
    LabelAssignment out{g.n, {}};
    for (const auto& e : g.edges) out.entries[e] = label_index(g.n, e);
    return out;
}

}  // namespace antimagic
