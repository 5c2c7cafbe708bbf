#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Definition-level checkers for arbitrary labeled (di)graphs, plus exhaustive
// brute-force searches at desk scale. These are independent of the closed
// forms and serve as the oracle for them.

struct VertexWitness {
    std::int64_t u{};
    std::int64_t v{};
    std::int64_t value{};  // the shared sum/weight
};

struct EdgeCollisionWitness {
    EdgePair first;
    EdgePair second;
    std::int64_t weight{};
};

struct CheckResult {
    bool holds{};
    std::optional<VertexWitness> witness;  // present iff !holds
};

// All vertex sums pairwise distinct under an edge bijection E -> {1..l}.
// Rejects non-bijective labelings.
CheckResult check_antimagic(const SimpleGraph& g,
                            const std::map<Arc, std::int64_t>& edge_labels);

// All oriented vertex sums (entering minus leaving) pairwise distinct.
CheckResult check_oriented_antimagic(const OrientedGraph& d,
                                     const std::map<Arc, std::int64_t>& edge_labels);

struct TotalCheck {
    bool is_total{};
    bool is_super{};
    bool vertex_antimagic_total{};
    bool edge_antimagic_total{};
    bool totally_antimagic_total{};
    std::optional<VertexWitness> vertex_witness;
    std::optional<EdgeCollisionWitness> edge_witness;
};

// Flags report all defects; nothing is thrown.
TotalCheck check_total(const SimpleGraph& g, const Labeling& labeling);

struct SearchOutcome {
    bool exists{};
    std::uint64_t count{};
    std::optional<Labeling> example;
};

// Iterates all l! edge bijections in lexicographic order (edges sorted).
// Rejects graphs with more than cap edges.
SearchOutcome exhaustive_antimagic(const SimpleGraph& g, int cap = 10);

struct OrientationSearchOutcome {
    bool exists{};
    std::uint64_t count{};  // (orientation, labeling) pairs that verify
    std::optional<OrientedGraph> orientation;
    std::optional<Labeling> labeling;
};

// Searches all 2^l orientations times l! labelings; the first witness in
// scan order is reported.
OrientationSearchOutcome exhaustive_orientation_antimagic(const SimpleGraph& g, int cap = 8);

}  // namespace antimagic
