#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace antimagic {

// Unordered edge {i,j} of a simple graph, stored with i < j. Vertices are 1-based.
struct EdgePair {
    std::int64_t i{};
    std::int64_t j{};
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Directed edge u -> v of an orientation.
struct Arc {
    std::int64_t from{};
    std::int64_t to{};
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple undirected graph on vertices 1..n. Edges kept sorted, no duplicates,
// no self-loops.
struct SimpleGraph {
    std::int64_t n{};
    std::vector<EdgePair> edges;
};

// Orientation of a simple graph: at most one arc per unordered vertex pair.
struct OrientedGraph {
    std::int64_t n{};
    std::vector<Arc> arcs;
};

// A user-supplied labeling. Vertex labels are present only for total labelings;
// edge labels are keyed by the arc as stored (normalized i<j for undirected
// edges).
struct Labeling {
    std::map<std::int64_t, std::int64_t> vertex_labels;
    std::map<Arc, std::int64_t> edge_labels;
};

SimpleGraph complete_graph(std::int64_t n);

// Directs every edge {i,j}, i<j, as i -> j.
OrientedGraph canonical_orientation(const SimpleGraph& g);

// Forgets directions. Rejects antiparallel arc pairs.
SimpleGraph underlying(const OrientedGraph& d);

}  // namespace antimagic
