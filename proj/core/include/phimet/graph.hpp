#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "phimet/numeric.hpp"

namespace phimet {

using VertexId = std::string;

// Finite simple undirected graph with one nonnegative weight per edge.
// Vertices are string-labeled at the boundary and densely indexed
// inside; parse order is preserved so serialization round-trips.
// Immutable once built.
class WeightedGraph {
public:
    struct EdgeRec {
        int u, v;        // endpoint indices, u < v
        Weight w;
        std::string lexeme;  // input spelling, kept for round-trips
    };

    explicit WeightedGraph(NumericMode mode) : mode_(mode) {}

    // Returns the index; idempotent for known labels. Labels must be
    // nonempty and whitespace-free.
    int add_vertex(const VertexId& label);
    void add_edge(const VertexId& a, const VertexId& b, Weight w,
                  std::string lexeme = "", int line = 0);

    const NumericMode& mode() const { return mode_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertex_labels() const { return labels_; }
    const VertexId& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const EdgeRec& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    int index_of(const VertexId& label) const;  // -1 when absent
    int require_index(const VertexId& label) const;
    int find_edge(int u, int v) const;          // -1 when absent
    // (neighbor, edge index) pairs in insertion order.
    std::span<const std::pair<int, int>> neighbors(int v) const;

private:
    NumericMode mode_;
    std::vector<VertexId> labels_;
    std::unordered_map<VertexId, int> index_;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Edge-list text: '#' starts a comment, blank lines are skipped,
// `vertex <label>` declares an isolated vertex, `<u> <v> <w>` an edge.
WeightedGraph parse_edge_list(std::string_view text, const NumericMode& mode);

// JSON object {"vertices": [...], "edges": [{"u","v","w"}...]} with w a
// string lexeme parsed per mode.
WeightedGraph parse_graph_json(std::string_view text, const NumericMode& mode);

std::string serialize_edge_list(const WeightedGraph& g);
std::string serialize_graph_json(const WeightedGraph& g);

// Connected components as sorted label blocks, ordered by smallest label.
std::vector<std::vector<VertexId>> components(const WeightedGraph& g);

// Dense component id per vertex plus the component count.
std::pair<std::vector<int>, int> component_ids(const WeightedGraph& g);

// Vertex-set, edge-set and weight equality; insertion order ignored.
bool same_graph(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace phimet
