#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "phimet/solver.hpp"

namespace phimet {

// Per-edge comparison of the given weight with the solved distance.
// The distance never exceeds the weight, so pass means equality (up to
// tolerance in float mode) and fail means the weight overshoots some
// alternative path. `boundary` marks edges where the best alternative
// path ties the weight exactly, i.e. the verdict sits on the bound.
struct EdgeCheck {
    int edge_index;
    Weight w;
    Weight d;
    bool pass;
    bool boundary;
};

struct DomainViolation {
    int edge_index;
    Weight w;
    Weight floor;
};

struct Verdict {
    std::string family;
    NumericMode mode;
    bool metrizable = false;
    std::vector<EdgeCheck> edges;
    std::vector<DomainViolation> domain_violations;
};

// A cycle witnessing that `edge` cannot keep its weight: the rest of
// the cycle joins its endpoints with a strictly smaller combined
// weight. Re-checkable from scratch with revalidate().
struct ViolationCertificate {
    std::pair<VertexId, VertexId> edge;
    std::vector<VertexId> cycle;  // open walk from one endpoint to the other
    Weight lhs;                   // the edge weight
    Weight rhs;                   // combined weight of the rest of the cycle
};

// Decides whether the weight extends to a matrix satisfying the
// family's triangle bound on all of V. Weights below the domain floor
// are reported as domain violations, not metrizability failures.
Verdict check(const WeightedGraph& g, const TriangleFamily& family,
              int threads = 1);

// Builds the witness cycle for a failing edge from a predecessor map
// computed with that edge excluded, rooted at its smaller-label endpoint.
ViolationCertificate certificate(const WeightedGraph& g,
                                 const TriangleFamily& family, int edge_index,
                                 const SingleSource& search);

// One certificate per failing edge of the verdict.
std::vector<ViolationCertificate> certificates(const WeightedGraph& g,
                                               const TriangleFamily& family,
                                               const Verdict& verdict);

// Independent re-check of a certificate by direct fold computation.
bool revalidate(const WeightedGraph& g, const TriangleFamily& family,
                const ViolationCertificate& cert);

nlohmann::json check_report(const WeightedGraph& g, const Verdict& verdict,
                            const std::vector<ViolationCertificate>& certs);

}  // namespace phimet
