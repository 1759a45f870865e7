#pragma once

#include <vector>

namespace hypermix {

/// Hypergraph on vertices 0..n-1. Edges keep their insertion order; vertices
/// within an edge are stored sorted ascending so edges compare as sets.
///
/// Construction only enforces vertex-index bounds. Structural defects
/// (duplicate edges, edges with fewer than two distinct vertices) are kept
/// and surfaced by validate(), so malformed inputs can be inspected instead
/// of being rejected outright.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int e) const { return edges_[e]; }

    /// Indices of the edges containing v.
    const std::vector<int>& edges_at(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

    int max_degree() const;
    int min_edge_size() const; // 0 when there are no edges
    int max_edge_size() const;
    bool is_uniform() const;

    /// True iff every edge has exactly two (distinct) vertices.
    bool is_graph() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

struct ValidationReport {
    int n = 0;
    int edge_count = 0;
    int min_edge_size = 0;
    int max_edge_size = 0;
    int max_degree = 0;
    bool uniform = false;
    bool has_duplicate_edges = false;
    bool has_malformed_edges = false; // an edge with < 2 vertices or a repeated vertex

    bool ok() const { return !has_duplicate_edges && !has_malformed_edges; }
};

/// Recomputes every derived quantity directly from the edge list.
ValidationReport validate(const Hypergraph& h);

} // namespace hypermix
