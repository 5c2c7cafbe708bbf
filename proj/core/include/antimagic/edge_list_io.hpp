#pragma once

#include <optional>
#include <string>

#include "antimagic/graph.hpp"

namespace antimagic {

// Edge-list text format:
//   line 1: "n l" or "directed n l"
//   then l lines "i j" or "i j k" (1-based, whitespace separated)
//   optional lines "v i k" assigning vertex labels (total labelings)
//   '#' begins a comment line
// Serialization is canonical: vertex-label lines first, edges sorted
// lexicographically, LF endings, no trailing whitespace.

struct ParsedEdgeList {
    bool directed{};
    SimpleGraph graph;      // populated when !directed
    OrientedGraph digraph;  // populated when directed
    std::optional<Labeling> labeling;
};

// Throws std::invalid_argument with a line number on malformed input,
// out-of-range indices, duplicate edges, or an invalid label set.
// force_directed interprets an unmarked file as an arc list.
ParsedEdgeList parse_edge_list(const std::string& text, bool force_directed = false);

std::string serialize(const SimpleGraph& g, const std::optional<Labeling>& labeling = {});
std::string serialize(const OrientedGraph& d, const std::optional<Labeling>& labeling = {});

}  // namespace antimagic
