#include "antimagic/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace antimagic {

namespace {

// Distinctness of per-vertex values; on failure reports the lexicographically
// first colliding vertex pair.
CheckResult distinct_sums(const std::vector<std::int64_t>& sums) {
    CheckResult r{true, {}};
    const std::int64_t n = static_cast<std::int64_t>(sums.size()) - 1;
    for (std::int64_t u = 1; u <= n && r.holds; ++u)
        for (std::int64_t v = u + 1; v <= n; ++v)
            if (sums[static_cast<std::size_t>(u)] == sums[static_cast<std::size_t>(v)]) {
                r.holds = false;
                r.witness = VertexWitness{u, v, sums[static_cast<std::size_t>(u)]};
                break;
            }
    return r;
}

void require_bijection(const std::map<Arc, std::int64_t>& labels, std::size_t edge_count) {
    if (labels.size() != edge_count)
        throw std::invalid_argument("labeling covers " + std::to_string(labels.size()) +
                                    " edges, graph has " + std::to_string(edge_count));
    std::set<std::int64_t> image;
    for (const auto& [arc, k] : labels) image.insert(k);
    if (image.size() != edge_count || (edge_count > 0 && (*image.begin() != 1 ||
                                                          *image.rbegin() != static_cast<std::int64_t>(edge_count))))
        throw std::invalid_argument("edge labels are not a bijection onto 1.." +
                                    std::to_string(edge_count));
}

}  // namespace

CheckResult check_antimagic(const SimpleGraph& g, const std::map<Arc, std::int64_t>& labels) {
    require_bijection(labels, g.edges.size());
    std::vector<std::int64_t> sums(static_cast<std::size_t>(g.n) + 1, 0);
    for (const auto& [arc, k] : labels) {
        EdgePair e{std::min(arc.from, arc.to), std::max(arc.from, arc.to)};
        if (!std::binary_search(g.edges.begin(), g.edges.end(), e))
            throw std::invalid_argument("labeled edge not in graph");
        sums[static_cast<std::size_t>(e.i)] += k;
        sums[static_cast<std::size_t>(e.j)] += k;
    }
    return distinct_sums(sums);
}

CheckResult check_oriented_antimagic(const OrientedGraph& d,
                                     const std::map<Arc, std::int64_t>& labels) {
    require_bijection(labels, d.arcs.size());
    std::vector<std::int64_t> sums(static_cast<std::size_t>(d.n) + 1, 0);
    for (const auto& [arc, k] : labels) {
        if (arc.from < 1 || arc.from > d.n || arc.to < 1 || arc.to > d.n || arc.from == arc.to)
            throw std::invalid_argument("labeled arc endpoints out of range");
        sums[static_cast<std::size_t>(arc.to)] += k;
        sums[static_cast<std::size_t>(arc.from)] -= k;
    }
    return distinct_sums(sums);
}

TotalCheck check_total(const SimpleGraph& g, const Labeling& f) {
    TotalCheck out;
    const std::int64_t n = g.n;
    const std::int64_t l = static_cast<std::int64_t>(g.edges.size());

    // is_total: bijection V u E -> {1..n+l}
    std::set<std::int64_t> image;
    bool complete = static_cast<std::int64_t>(f.vertex_labels.size()) == n &&
                    static_cast<std::int64_t>(f.edge_labels.size()) == l;
    for (const auto& [v, k] : f.vertex_labels) image.insert(k);
    for (const auto& [e, k] : f.edge_labels) image.insert(k);
    out.is_total = complete && static_cast<std::int64_t>(image.size()) == n + l &&
                   (image.empty() || (*image.begin() == 1 && *image.rbegin() == n + l));
    out.is_super = out.is_total;
    if (out.is_super)
        for (const auto& [v, k] : f.vertex_labels)
            if (k < 1 || k > n) out.is_super = false;

    if (!out.is_total) return out;

    // Vertex weights w_f(v) = f(v) + sum of incident edge labels.
    std::vector<std::int64_t> weights(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [v, k] : f.vertex_labels) weights[static_cast<std::size_t>(v)] = k;
    for (const auto& [arc, k] : f.edge_labels) {
        weights[static_cast<std::size_t>(arc.from)] += k;
        weights[static_cast<std::size_t>(arc.to)] += k;
    }
    CheckResult vr = distinct_sums(weights);
    out.vertex_antimagic_total = vr.holds;
    out.vertex_witness = vr.witness;

    // Edge weights w(f(e)) = f(u) + f(v) + f(e), scanned for collisions.
    std::map<std::int64_t, std::vector<EdgePair>> by_weight;
    for (const auto& [arc, k] : f.edge_labels) {
        const std::int64_t w = f.vertex_labels.at(arc.from) + f.vertex_labels.at(arc.to) + k;
        by_weight[w].push_back({std::min(arc.from, arc.to), std::max(arc.from, arc.to)});
    }
    out.edge_antimagic_total = true;
    for (auto& [w, es] : by_weight)
        if (es.size() > 1) {
            out.edge_antimagic_total = false;
            std::sort(es.begin(), es.end());
            if (!out.edge_witness) out.edge_witness = EdgeCollisionWitness{es[0], es[1], w};
        }
    out.totally_antimagic_total = out.vertex_antimagic_total && out.edge_antimagic_total;
    return out;
}

SearchOutcome exhaustive_antimagic(const SimpleGraph& g, int cap) {
    const std::int64_t l = static_cast<std::int64_t>(g.edges.size());
    if (l > cap)
        throw std::invalid_argument("graph has " + std::to_string(l) + " edges, over cap " +
                                    std::to_string(cap) + "; raise the cap to search anyway");
    SearchOutcome out;
    std::vector<std::int64_t> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(g.n) + 1);
    do {
        std::fill(sums.begin(), sums.end(), 0);
        for (std::size_t idx = 0; idx < perm.size(); ++idx) {
            sums[static_cast<std::size_t>(g.edges[idx].i)] += perm[idx];
            sums[static_cast<std::size_t>(g.edges[idx].j)] += perm[idx];
        }
        std::vector<std::int64_t> sorted(sums.begin() + 1, sums.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            ++out.count;
            if (!out.exists) {
                out.exists = true;
                Labeling witness;
                for (std::size_t idx = 0; idx < perm.size(); ++idx)
                    witness.edge_labels[{g.edges[idx].i, g.edges[idx].j}] = perm[idx];
                out.example = std::move(witness);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

OrientationSearchOutcome exhaustive_orientation_antimagic(const SimpleGraph& g, int cap) {
    const std::int64_t l = static_cast<std::int64_t>(g.edges.size());
    if (l > cap)
        throw std::invalid_argument("graph has " + std::to_string(l) + " edges, over cap " +
                                    std::to_string(cap) + "; raise the cap to search anyway");
    OrientationSearchOutcome out;
    std::vector<std::int64_t> sums(static_cast<std::size_t>(g.n) + 1);
    for (std::uint64_t mask = 0; mask < (1ull << l); ++mask) {
        // bit b set reverses edge b (high-to-low instead of low-to-high)
        std::vector<Arc> arcs(static_cast<std::size_t>(l));
        for (std::int64_t b = 0; b < l; ++b) {
            const auto& e = g.edges[static_cast<std::size_t>(b)];
            arcs[static_cast<std::size_t>(b)] =
                (mask >> b) & 1 ? Arc{e.j, e.i} : Arc{e.i, e.j};
        }
        std::vector<std::int64_t> perm(static_cast<std::size_t>(l));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::fill(sums.begin(), sums.end(), 0);
            for (std::size_t idx = 0; idx < perm.size(); ++idx) {
                sums[static_cast<std::size_t>(arcs[idx].to)] += perm[idx];
                sums[static_cast<std::size_t>(arcs[idx].from)] -= perm[idx];
            }
            std::vector<std::int64_t> sorted(sums.begin() + 1, sums.end());
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                ++out.count;
                if (!out.exists) {
                    out.exists = true;
                    out.orientation = OrientedGraph{g.n, arcs};
                    Labeling witness;
                    for (std::size_t idx = 0; idx < perm.size(); ++idx)
                        witness.edge_labels[arcs[idx]] = perm[idx];
                    out.labeling = std::move(witness);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace antimagic
