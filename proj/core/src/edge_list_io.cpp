#include "antimagic/edge_list_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace antimagic {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_int(std::istringstream& in, std::size_t line_no, const char* what) {
    std::int64_t v;
    if (!(in >> v)) fail(line_no, std::string("expected ") + what);
    return v;
}

}  // namespace

ParsedEdgeList parse_edge_list(const std::string& text, bool force_directed) {
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&](std::istringstream& out) -> bool {
        while (std::getline(stream, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first) || first[0] == '#') continue;
            out = std::istringstream(line);
            return true;
        }
        return false;
    };

    std::istringstream header;
    if (!next_content_line(header)) throw std::invalid_argument("empty input: missing header");

    ParsedEdgeList out;
    out.directed = force_directed;
    std::string tok;
    header >> tok;
    std::int64_t n, l;
    if (tok == "directed") {
        out.directed = true;
        n = parse_int(header, line_no, "vertex count");
    } else {
        std::istringstream first_tok(tok);
        if (!(first_tok >> n) || !first_tok.eof()) fail(line_no, "malformed header");
    }
    l = parse_int(header, line_no, "edge count");
    std::string trail;
    if (header >> trail) fail(line_no, "trailing tokens in header");
    if (n < 1) fail(line_no, "vertex count must be >= 1");
    if (l < 0) fail(line_no, "edge count must be >= 0");

    std::set<EdgePair> seen;
    std::vector<Arc> arcs;
    Labeling labeling;
    bool any_edge_label = false, any_vertex_label = false;
    std::int64_t edges_read = 0;

    std::istringstream ls;
    while (true) {
        if (!next_content_line(ls)) break;
        std::string lead;
        ls >> lead;
        if (lead == "v") {
            const std::int64_t i = parse_int(ls, line_no, "vertex index");
            const std::int64_t k = parse_int(ls, line_no, "vertex label");
            if (i < 1 || i > n) fail(line_no, "vertex index out of range");
            if (!labeling.vertex_labels.emplace(i, k).second)
                fail(line_no, "duplicate vertex label line");
            any_vertex_label = true;
            continue;
        }
        std::istringstream el(lead);
        std::int64_t u;
        if (!(el >> u) || !el.eof()) fail(line_no, "expected edge endpoint");
        const std::int64_t v = parse_int(ls, line_no, "edge endpoint");
        if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "endpoint out of range 1..n");
        if (u == v) fail(line_no, "self-loop");
        EdgePair e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) fail(line_no, "duplicate edge");
        if (!out.directed && u > v) fail(line_no, "undirected edge must be listed low-to-high");
        arcs.push_back({u, v});
        std::int64_t k;
        if (ls >> k) {
            labeling.edge_labels[{u, v}] = k;
            any_edge_label = true;
        }
        ++edges_read;
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing tokens");
    }
    if (edges_read != l)
        throw std::invalid_argument("expected " + std::to_string(l) + " edges, found " +
                                    std::to_string(edges_read));
    if (any_edge_label && labeling.edge_labels.size() != arcs.size())
        throw std::invalid_argument("labels present on some edges but not all");

    if (out.directed) {
        out.digraph = OrientedGraph{n, std::move(arcs)};
        std::sort(out.digraph.arcs.begin(), out.digraph.arcs.end());
    } else {
        SimpleGraph g{n, {}};
        g.edges.reserve(arcs.size());
        for (const auto& a : arcs) g.edges.push_back({a.from, a.to});
        std::sort(g.edges.begin(), g.edges.end());
        out.graph = std::move(g);
    }
    if (any_edge_label || any_vertex_label) out.labeling = std::move(labeling);
    return out;
}

namespace {

std::string serialize_impl(bool directed, std::int64_t n, const std::vector<Arc>& arcs,
                           const std::optional<Labeling>& labeling) {
    std::ostringstream out;
    if (directed) out << "directed ";
    out << n << ' ' << arcs.size() << '\n';
    if (labeling)
        for (const auto& [i, k] : labeling->vertex_labels) out << "v " << i << ' ' << k << '\n';
    for (const auto& a : arcs) {
        out << a.from << ' ' << a.to;
        if (labeling) {
            auto it = labeling->edge_labels.find(a);
            if (it != labeling->edge_labels.end()) out << ' ' << it->second;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string serialize(const SimpleGraph& g, const std::optional<Labeling>& labeling) {
    std::vector<Arc> arcs;
    arcs.reserve(g.edges.size());
    for (const auto& e : g.edges) arcs.push_back({e.i, e.j});
    std::sort(arcs.begin(), arcs.end());
    return serialize_impl(false, g.n, arcs, labeling);
}

std::string serialize(const OrientedGraph& d, const std::optional<Labeling>& labeling) {
    std::vector<Arc> arcs = d.arcs;
    std::sort(arcs.begin(), arcs.end());
    return serialize_impl(true, d.n, arcs, labeling);
}

}  // namespace antimagic
