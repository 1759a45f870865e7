#include "hypermix/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hypermix {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : edges_) {
        for (int v : e) {
            if (v < 0 || v >= n_)
                throw std::invalid_argument("Hypergraph: vertex index " + std::to_string(v) +
                                            " out of range [0, " + std::to_string(n_) + ")");
        }
        std::sort(e.begin(), e.end());
    }
    incidence_.assign(static_cast<size_t>(n_), {});
    for (int ei = 0; ei < edge_count(); ++ei) {
        int prev = -1;
        for (int v : edges_[static_cast<size_t>(ei)]) {
            if (v != prev) incidence_[static_cast<size_t>(v)].push_back(ei);
            prev = v;
        }
    }
}

int Hypergraph::max_degree() const {
    int d = 0;
    for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

int Hypergraph::min_edge_size() const {
    if (edges_.empty()) return 0;
    size_t s = edges_.front().size();
    for (const auto& e : edges_) s = std::min(s, e.size());
    return static_cast<int>(s);
}

int Hypergraph::max_edge_size() const {
    size_t s = 0;
    for (const auto& e : edges_) s = std::max(s, e.size());
    return static_cast<int>(s);
}

bool Hypergraph::is_uniform() const {
    return edges_.empty() || min_edge_size() == max_edge_size();
}

bool Hypergraph::is_graph() const {
    for (const auto& e : edges_) {
        if (e.size() != 2 || e[0] == e[1]) return false;
    }
    return true;
}

ValidationReport validate(const Hypergraph& h) {
    ValidationReport r;
    r.n = h.vertex_count();
    r.edge_count = h.edge_count();
    r.min_edge_size = h.min_edge_size();
    r.max_edge_size = h.max_edge_size();
    r.max_degree = h.max_degree();
    r.uniform = h.is_uniform();

    std::set<std::vector<int>> seen;
    for (const auto& e : h.edges()) {
        if (e.size() < 2) r.has_malformed_edges = true;
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1]) r.has_malformed_edges = true;
        if (!seen.insert(e).second) r.has_duplicate_edges = true;
    }
    return r;
}

} // namespace hypermix
