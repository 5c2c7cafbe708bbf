#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

// Per-n certification of the distinctness properties of the canonical
// labeling of K_n. Every check is exact integer arithmetic; no verdict ever
// depends on floating point.

enum class Verdict { yes, no, not_applicable };

const char* to_string(Verdict v);

struct CertifiedCheck {
    Verdict verdict{};
    std::optional<VertexWitness> witness;  // counterexample when verdict == no
};

// Vertex sums pairwise distinct (checked by pairwise comparison and by strict
// increase in i). n = 2 is certified false; n < 2 rejected.
CertifiedCheck certify_vertex_sums(std::int64_t n);

// Vertex weights of the super total labeling pairwise distinct and strictly
// increasing. Not applicable below n = 3.
CertifiedCheck certify_vertex_weights(std::int64_t n);

// Oriented sums pairwise distinct, verified both by direct comparison of
// values and by the cross-multiplied non-vanishing test
//   3n^2 - 6n(i+j-1) + 2(i^2+ij+j^2) - 3(i+j) + 1 != 0.
// The two routes must agree on every pair. Not applicable below n = 3.
CertifiedCheck certify_oriented_sums(std::int64_t n);

// All unordered pairs of distinct edges with equal edge weight, in
// lexicographic order of the index tuples.
std::vector<EdgeCollisionWitness> edge_weight_collisions(std::int64_t n);

// Quadruple i < i' < j' < j with (i'-i)(2n - i - i' + 1) = 4(j - j'),
// the exact integer form of the edge-weight collision condition.
struct ExceptionQuadruple {
    std::int64_t i{};
    std::int64_t i_prime{};
    std::int64_t j_prime{};
    std::int64_t j{};
    friend auto operator<=>(const ExceptionQuadruple&, const ExceptionQuadruple&) = default;
};

std::vector<ExceptionQuadruple> theorem_exceptions(std::int64_t n);

struct Certificate {
    std::int64_t n{};
    Verdict antimagic_ok{};
    Verdict vertex_total_ok{};
    Verdict edge_total_ok{};
    Verdict totally_total_ok{};
    Verdict oriented_ok{};
    std::vector<EdgeCollisionWitness> collisions;
    std::vector<ExceptionQuadruple> exceptions;
};

Certificate certify(std::int64_t n);

// One certificate per n in [n_lo, n_hi]. Rejects spans above the work limit.
std::vector<Certificate> scan_range(std::int64_t n_lo, std::int64_t n_hi,
                                    std::int64_t span_limit = 10000);

}  // namespace antimagic
