#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antimagic/certify.hpp"
#include "antimagic/closed_forms.hpp"
#include "antimagic/edge_list_io.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/verify.hpp"

namespace am = antimagic;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string pair_str(const am::EdgePair& e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

json certificate_json(const am::Certificate& c) {
    json flags = {{"antimagic_ok", am::to_string(c.antimagic_ok)},
                  {"vertex_total_ok", am::to_string(c.vertex_total_ok)},
                  {"edge_total_ok", am::to_string(c.edge_total_ok)},
                  {"totally_total_ok", am::to_string(c.totally_total_ok)},
                  {"oriented_ok", am::to_string(c.oriented_ok)}};
    json witnesses = {{"collisions", json::array()}, {"exceptions", json::array()}};
    for (const auto& w : c.collisions)
        witnesses["collisions"].push_back(
            {{"first", {w.first.i, w.first.j}}, {"second", {w.second.i, w.second.j}}, {"weight", w.weight}});
    for (const auto& q : c.exceptions)
        witnesses["exceptions"].push_back({q.i, q.i_prime, q.j_prime, q.j});
    return {{"order", c.n}, {"flags", flags}, {"witnesses", witnesses}};
}

void print_certificate(const am::Certificate& c) {
    std::cout << "n " << c.n << '\n'
              << "antimagic_ok " << am::to_string(c.antimagic_ok) << '\n'
              << "vertex_total_ok " << am::to_string(c.vertex_total_ok) << '\n'
              << "edge_total_ok " << am::to_string(c.edge_total_ok) << '\n'
              << "totally_total_ok " << am::to_string(c.totally_total_ok) << '\n'
              << "oriented_ok " << am::to_string(c.oriented_ok) << '\n';
    for (const auto& w : c.collisions)
        std::cout << "collision " << pair_str(w.first) << "~" << pair_str(w.second) << " weight "
                  << w.weight << '\n';
    for (const auto& q : c.exceptions)
        std::cout << "exception (" << q.i << "," << q.i_prime << "," << q.j_prime << "," << q.j
                  << ")\n";
}

int cmd_label(std::int64_t n, std::int64_t inverse_k, bool has_inverse, const std::string& graph_file) {
    if (!graph_file.empty()) {
        auto parsed = am::parse_edge_list(read_file(graph_file));
        const am::SimpleGraph& g =
            parsed.directed ? am::underlying(parsed.digraph) : parsed.graph;
        auto assignment = am::label_subgraph(g);
        am::Labeling lab;
        for (const auto& [e, k] : assignment.entries) lab.edge_labels[{e.i, e.j}] = k;
        std::cout << am::serialize(g, lab);
        return 0;
    }
    if (has_inverse) {
        auto p = am::label_inverse(n, inverse_k);
        std::cout << p.i << ' ' << p.j << '\n';
        return 0;
    }
    auto assignment = am::label_all(n);
    am::Labeling lab;
    for (const auto& [e, k] : assignment.entries) lab.edge_labels[{e.i, e.j}] = k;
    std::cout << am::serialize(am::complete_graph(n), lab);
    return 0;
}

int cmd_sums(std::int64_t n, const std::string& format) {
    auto report = am::sums_report(n);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"vertex", r.vertex},
                            {"in_sum", r.in_sum},
                            {"out_sum", r.out_sum},
                            {"total_sum", r.total_sum},
                            {"oriented_sum", r.oriented_sum},
                            {"vertex_weight", r.vertex_weight}});
        json out = {{"order", report.n},
                    {"rows", rows},
                    {"closed_vs_direct_ok", report.closed_vs_direct_ok},
                    {"sums_distinct", report.sums_distinct}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "i S- S+ S So w\n";
    for (const auto& r : report.rows)
        std::cout << r.vertex << ' ' << r.in_sum << ' ' << r.out_sum << ' ' << r.total_sum << ' '
                  << r.oriented_sum << ' ' << r.vertex_weight << '\n';
    std::cout << "closed_vs_direct " << (report.closed_vs_direct_ok ? "ok" : "MISMATCH") << '\n';
    if (!report.sums_distinct) std::cout << "warning: vertex sums are not distinct\n";
    return 0;
}

int cmd_certify(std::int64_t n, const std::string& format) {
    auto cert = am::certify(n);
    if (format == "json")
        std::cout << certificate_json(cert).dump(2) << '\n';
    else
        print_certificate(cert);
    return 0;
}

int cmd_scan(std::int64_t lo, std::int64_t hi, std::int64_t limit, const std::string& format) {
    auto certs = am::scan_range(lo, hi, limit);
    std::vector<std::int64_t> edge_total_set;
    for (const auto& c : certs)
        if (c.edge_total_ok == am::Verdict::yes) edge_total_set.push_back(c.n);
    if (format == "json") {
        json rows = json::array();
        for (const auto& c : certs) rows.push_back(certificate_json(c));
        std::cout << json{{"rows", rows}, {"edge_total_ok_set", edge_total_set}}.dump(2) << '\n';
        return 0;
    }
    std::cout << "n antimagic vertex_total edge_total totally_total oriented\n";
    for (const auto& c : certs)
        std::cout << c.n << ' ' << am::to_string(c.antimagic_ok) << ' '
                  << am::to_string(c.vertex_total_ok) << ' ' << am::to_string(c.edge_total_ok)
                  << ' ' << am::to_string(c.totally_total_ok) << ' '
                  << am::to_string(c.oriented_ok) << '\n';
    std::cout << "edge_total_ok for n in:";
    for (auto n : edge_total_set) std::cout << ' ' << n;
    std::cout << '\n';
    return 0;
}

int cmd_verify(const std::string& file, bool directed, bool total) {
    auto parsed = am::parse_edge_list(read_file(file), directed);
    if (!parsed.labeling || parsed.labeling->edge_labels.empty())
        throw std::runtime_error(file + ": no edge labels present; nothing to verify");

    if (total) {
        am::SimpleGraph g = parsed.directed ? am::underlying(parsed.digraph) : parsed.graph;
        am::Labeling lab = *parsed.labeling;
        if (lab.vertex_labels.empty())
            for (std::int64_t i = 1; i <= g.n; ++i) lab.vertex_labels[i] = i;
        auto r = am::check_total(g, lab);
        std::cout << "total: " << (r.is_total ? "true" : "false") << '\n'
                  << "super: " << (r.is_super ? "true" : "false") << '\n'
                  << "vertex-antimagic-total: " << (r.vertex_antimagic_total ? "true" : "false");
        if (r.vertex_witness)
            std::cout << " (v" << r.vertex_witness->u << ",v" << r.vertex_witness->v << " both "
                      << r.vertex_witness->value << ")";
        std::cout << '\n'
                  << "edge-antimagic-total: " << (r.edge_antimagic_total ? "true" : "false");
        if (r.edge_witness)
            std::cout << " (collision at " << r.edge_witness->weight << ")";
        std::cout << '\n'
                  << "totally-antimagic-total: " << (r.totally_antimagic_total ? "true" : "false")
                  << '\n';
        return 0;
    }

    if (parsed.directed) {
        auto r = am::check_oriented_antimagic(parsed.digraph, parsed.labeling->edge_labels);
        if (r.holds)
            std::cout << "oriented antimagic\n";
        else
            std::cout << "NOT oriented antimagic: v" << r.witness->u << ",v" << r.witness->v
                      << " both " << r.witness->value << '\n';
        return 0;
    }

    auto r = am::check_antimagic(parsed.graph, parsed.labeling->edge_labels);
    if (r.holds) {
        // recompute the sums for the report line
        std::vector<std::int64_t> sums(static_cast<std::size_t>(parsed.graph.n) + 1, 0);
        for (const auto& [arc, k] : parsed.labeling->edge_labels) {
            sums[static_cast<std::size_t>(arc.from)] += k;
            sums[static_cast<std::size_t>(arc.to)] += k;
        }
        std::cout << "antimagic: sums";
        for (std::int64_t i = 1; i <= parsed.graph.n; ++i)
            std::cout << ' ' << sums[static_cast<std::size_t>(i)];
        std::cout << '\n';
    } else {
        std::cout << "NOT antimagic: v" << r.witness->u << ",v" << r.witness->v << " both "
                  << r.witness->value << '\n';
    }
    return 0;
}

int cmd_search(const std::string& file, bool orientations, int cap) {
    auto parsed = am::parse_edge_list(read_file(file));
    const am::SimpleGraph& g = parsed.directed ? am::underlying(parsed.digraph) : parsed.graph;
    if (orientations) {
        auto r = am::exhaustive_orientation_antimagic(g, cap);
        std::cout << (r.exists ? "exists" : "does not exist") << " count " << r.count << '\n';
        if (r.exists) std::cout << am::serialize(*r.orientation, r.labeling);
        return 0;
    }
    auto r = am::exhaustive_antimagic(g, cap);
    if (r.exists) {
        std::cout << "exists count " << r.count << '\n';
        std::cout << am::serialize(g, r.example);
    } else {
        std::cout << "not antimagic count 0\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical edge labelings of complete graphs: construction, exact sums, "
                 "certification, verification, and exhaustive search"};
    app.require_subcommand(1);

    std::int64_t n = 0, inverse_k = 0, lo = 0, hi = 0, scan_limit = 10000;
    std::string graph_file, format = "table", file;
    bool directed = false, total = false, orientations = false;
    int cap = 0;

    auto* label = app.add_subcommand("label", "Canonical labeling of K_n or a subgraph");
    auto* label_n = label->add_option("n", n, "order of K_n");
    auto* label_inv = label->add_option("--inverse", inverse_k, "look up the edge with this label");
    auto* label_graph = label->add_option("--graph", graph_file, "label the edges of this file")
                            ->check(CLI::ExistingFile);
    label_graph->excludes(label_n);
    label_inv->needs(label_n);

    auto* sums = app.add_subcommand("sums", "Per-vertex sums and weights of K_n");
    sums->add_option("n", n, "order of K_n")->required();
    sums->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* certify = app.add_subcommand("certify", "Certificate for a single n");
    certify->add_option("n", n, "order of K_n")->required();
    certify->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* scan = app.add_subcommand("scan", "Certificates for a range of n");
    scan->add_option("n_lo", lo, "first order")->required();
    scan->add_option("n_hi", hi, "last order")->required();
    scan->add_option("--limit", scan_limit, "maximum span");
    scan->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify", "Check a labeled edge-list file");
    verify->add_option("file", file, "labeled edge list")->required()->check(CLI::ExistingFile);
    verify->add_flag("--directed", directed, "treat edges as arcs");
    verify->add_flag("--total", total, "labels are a total labeling");

    auto* search = app.add_subcommand("search", "Exhaustive labeling/orientation search");
    search->add_option("file", file, "edge list")->required()->check(CLI::ExistingFile);
    search->add_flag("--orientations", orientations, "search orientations too");
    search->add_option("--cap", cap, "maximum edge count to search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (label->parsed()) {
            if (graph_file.empty() && label_n->count() == 0)
                throw std::runtime_error("label: give an order n or --graph FILE");
            return cmd_label(n, inverse_k, label_inv->count() > 0, graph_file);
        }
        if (sums->parsed()) return cmd_sums(n, format);
        if (certify->parsed()) return cmd_certify(n, format);
        if (scan->parsed()) return cmd_scan(lo, hi, scan_limit, format);
        if (verify->parsed()) return cmd_verify(file, directed, total);
        if (search->parsed())
            return cmd_search(file, orientations, cap > 0 ? cap : (orientations ? 8 : 10));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
