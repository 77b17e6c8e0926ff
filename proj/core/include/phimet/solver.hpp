#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phimet/graph.hpp"
#include "phimet/triangle.hpp"

namespace phimet {

// Symmetric matrix of combined-path distances over a fixed vertex
// order. Absent cells mark vertex pairs with no joining path.
struct DistanceMatrix {
    std::vector<VertexId> order;
    std::vector<std::optional<Weight>> cells;  // row-major

    int size() const { return static_cast<int>(order.size()); }
    const std::optional<Weight>& at(int i, int j) const {
        return cells[static_cast<size_t>(i) * order.size() +
                     static_cast<size_t>(j)];
    }

    // TSV with a label header row and column; `inf` marks unreachable.
    std::string to_tsv() const;
    nlohmann::json to_json() const;
};

// Combined weight of the path's edges, in order; a single vertex path
// yields the family identity.
Weight path_weight(const TriangleFamily& family, const WeightedGraph& g,
                   std::span<const VertexId> path);

struct SingleSource {
    std::vector<std::optional<Weight>> dist;
    std::vector<int> pred;  // -1 at the source and off-component
};

// Label-setting search from `source`. Valid because the family
// dominates max: extending a path never shrinks its combined weight.
// `excluded_edge` (an edge index, or -1) drops one edge from the scan.
SingleSource single_source(const WeightedGraph& g, const TriangleFamily& family,
                           int source, int excluded_edge = -1);
SingleSource single_source(const WeightedGraph& g, const TriangleFamily& family,
                           const VertexId& source);

struct SolveOptions {
    int threads = 1;
    // Route max-family queries through the spanning-tree bottleneck
    // path; must agree with the generic search.
    bool max_fast_path = false;
};

DistanceMatrix all_pairs(const WeightedGraph& g, const TriangleFamily& family,
                         const SolveOptions& options = {});

// Minimax distances for the max family via a minimum spanning forest.
DistanceMatrix max_bottleneck_all_pairs(const WeightedGraph& g);

struct ContinuationOptions {
    // Weight for the edges that link component representatives;
    // defaults to the family identity.
    std::optional<Weight> bridge_weight;
    // Per-component override, keyed by component representative label.
    std::map<VertexId, Weight> component_bridges;
    bool force = false;  // skip the metrizability gate
    SolveOptions solve;
};

// The full distance matrix of the maximal continuation. Disconnected
// inputs are joined by bridge edges between component representatives
// before solving. Refuses non-metrizable weights unless forced.
DistanceMatrix build_continuation(const WeightedGraph& g,
                                  const TriangleFamily& family,
                                  const ContinuationOptions& options = {});

}  // namespace phimet
