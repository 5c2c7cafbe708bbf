#include "antimagic/closed_forms.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "antimagic/labeling.hpp"

namespace antimagic {

namespace {

using I128 = __int128;

void require_vertex(std::int64_t n, std::int64_t i) {
    if (n < 2) throw std::invalid_argument("order: n must be >= 2, got " + std::to_string(n));
    if (i < 1 || i > n)
        throw std::invalid_argument("vertex index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(n));
}

// Divide a 6-scaled numerator back down, asserting exact divisibility and a
// result that fits in 64 bits.
std::int64_t sixth(I128 numerator) {
    if (numerator % 6 != 0)
        throw std::logic_error("closed form: 6-scaled intermediate not divisible by 6");
    I128 v = numerator / 6;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("closed form value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t in_sum(std::int64_t n, std::int64_t i) {
    require_vertex(n, i);
    const I128 N = n, I = i;
    // 6 * ((n+1)C(i,2) - n(i-1) - i(i-1)(i-2)/6)
    return sixth(3 * (N + 1) * I * (I - 1) - 6 * N * (I - 1) - I * (I - 1) * (I - 2));
}

std::int64_t out_sum(std::int64_t n, std::int64_t i) {
    require_vertex(n, i);
    const I128 N = n, I = i;
    return sixth(6 * (N * (N - 1) / 2 + (N - (I + 1)) * (N * (I - 1) - I * (I - 1) / 2)));
}

std::int64_t vertex_sum(std::int64_t n, std::int64_t i) {
    require_vertex(n, i);
    const I128 N = n, I = i;
    // 6 * (i^3/3 - (n-1)i^2 + (n^2-n-4/3)i - n(n-3)/2)
    return sixth(2 * I * I * I - 6 * (N - 1) * I * I + (6 * N * N - 6 * N - 8) * I -
                 3 * N * (N - 3));
}

std::int64_t oriented_sum(std::int64_t n, std::int64_t i) {
    require_vertex(n, i);
    const I128 N = n, I = i;
    // 6 * (-(2/3)i^3 + (2n+1)i^2 - (n^2+2n+1/3)i + C(n+1,2))
    return sixth(-4 * I * I * I + 6 * (2 * N + 1) * I * I - (6 * N * N + 12 * N + 2) * I +
                 3 * N * (N + 1));
}

std::int64_t vertex_weight(std::int64_t n, std::int64_t i) {
    require_vertex(n, i);
    const I128 N = n, I = i;
    // 6 * (i^3/3 - (n-1)i^2 + (n^2-n-1/3)i - n(n-3)/2)
    const std::int64_t closed = sixth(2 * I * I * I - 6 * (N - 1) * I * I +
                                      (6 * N * N - 6 * N - 2) * I - 3 * N * (N - 3));
    const std::int64_t direct = i + vertex_sum(n, i);
    if (closed != direct)
        throw std::logic_error("vertex_weight: closed form disagrees with i + vertex_sum");
    return closed;
}

std::int64_t edge_weight(std::int64_t n, EdgePair p) {
    const std::int64_t k = label_index(n, p);  // validates n and the pair
    const std::int64_t closed = n * p.i + 2 * p.j - p.i * (p.i - 1) / 2;
    if (closed != p.i + p.j + n + k)
        throw std::logic_error("edge_weight: closed form disagrees with i + j + n + F(i,j)");
    return closed;
}

Labeling build_super_total(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("build_super_total: n must be >= 2");
    Labeling f;
    for (std::int64_t i = 1; i <= n; ++i) f.vertex_labels[i] = i;
    for (const auto& [pair, k] : label_all(n).entries) f.edge_labels[{pair.i, pair.j}] = n + k;
    return f;
}

SumsReport sums_report(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("sums_report: n must be >= 2");
    SumsReport report{n, {}, true, true};

    // Direct summation over the canonical labeling, the cross-check side.
    std::vector<std::int64_t> direct_in(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> direct_out(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [pair, k] : label_all(n).entries) {
        direct_out[static_cast<std::size_t>(pair.i)] += k;
        direct_in[static_cast<std::size_t>(pair.j)] += k;
    }

    std::set<std::int64_t> seen_sums;
    for (std::int64_t i = 1; i <= n; ++i) {
        SumsRow row{i, in_sum(n, i), out_sum(n, i), vertex_sum(n, i), oriented_sum(n, i),
                    vertex_weight(n, i)};
        if (row.total_sum != row.in_sum + row.out_sum ||
            row.oriented_sum != row.in_sum - row.out_sum)
            throw std::logic_error("sums_report: identity S = S- + S+ / S° = S- - S+ violated");
        const auto ui = static_cast<std::size_t>(i);
        if (row.in_sum != direct_in[ui] || row.out_sum != direct_out[ui] ||
            row.total_sum != direct_in[ui] + direct_out[ui] ||
            row.oriented_sum != direct_in[ui] - direct_out[ui])
            report.closed_vs_direct_ok = false;
        if (!seen_sums.insert(row.total_sum).second) report.sums_distinct = false;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace antimagic
