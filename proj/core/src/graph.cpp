#include "antimagic/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace antimagic {

SimpleGraph complete_graph(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    SimpleGraph g{n, {}};
    g.edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j) g.edges.push_back({i, j});
    return g;
}

OrientedGraph canonical_orientation(const SimpleGraph& g) {
    OrientedGraph d{g.n, {}};
    d.arcs.reserve(g.edges.size());
    for (const auto& e : g.edges) d.arcs.push_back({e.i, e.j});
    return d;
}

SimpleGraph underlying(const OrientedGraph& d) {
    std::set<EdgePair> seen;
    for (const auto& a : d.arcs) {
        EdgePair e{std::min(a.from, a.to), std::max(a.from, a.to)};
        if (!seen.insert(e).second)
            throw std::invalid_argument("underlying: antiparallel arcs on pair (" +
                                        std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    }
    SimpleGraph g{d.n, {seen.begin(), seen.end()}};
    return g;
}

}  // namespace antimagic
