#include "hypermix/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypermix/rng.hpp"

namespace hypermix {

Hypergraph gen_random_uniform(int n, int m, int max_degree, int edge_target,
                              std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("gen_random_uniform: m must be >= 2");
    if (m > n) throw std::invalid_argument("gen_random_uniform: m > n is infeasible");
    if (max_degree < 1) throw std::invalid_argument("gen_random_uniform: max_degree must be >= 1");
    if (edge_target < 0) throw std::invalid_argument("gen_random_uniform: negative edge_target");

    Rng rng(seed);
    std::vector<int> budget(static_cast<size_t>(n), max_degree);
    std::set<std::vector<int>> used;
    std::vector<std::vector<int>> edges;

    const int max_consecutive_rejects = 500;
    int rejects = 0;
    while (static_cast<int>(edges.size()) < edge_target && rejects < max_consecutive_rejects) {
        std::vector<int> eligible;
        for (int v = 0; v < n; ++v)
            if (budget[static_cast<size_t>(v)] > 0) eligible.push_back(v);
        if (static_cast<int>(eligible.size()) < m) break; // degree budget exhausted

        // partial Fisher-Yates: the first m entries become the candidate edge
        for (int i = 0; i < m; ++i) {
            int j = i + rng.next_below(static_cast<int>(eligible.size()) - i);
            std::swap(eligible[static_cast<size_t>(i)], eligible[static_cast<size_t>(j)]);
        }
        std::vector<int> edge(eligible.begin(), eligible.begin() + m);
        std::sort(edge.begin(), edge.end());

        if (!used.insert(edge).second) {
            ++rejects;
            continue;
        }
        rejects = 0;
        for (int v : edge) --budget[static_cast<size_t>(v)];
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph gen_frozen(int q, int m) {
    if (q < 2) throw std::invalid_argument("gen_frozen: q must be >= 2");
    if (m < 3) throw std::invalid_argument("gen_frozen: m must be >= 3");

    const int group_size = m - 1;
    const int n = q * group_size;
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(q - 1));
    for (int v = 0; v < n; ++v) {
        const int own_group = v / group_size;
        for (int j = 0; j < q; ++j) {
            if (j == own_group) continue;
            std::vector<int> edge;
            edge.reserve(static_cast<size_t>(m));
            edge.push_back(v);
            for (int i = 0; i < group_size; ++i) edge.push_back(j * group_size + i);
            edges.push_back(std::move(edge));
        }
    }
    return Hypergraph(n, std::move(edges));
}

Blowup gen_blowup(const Hypergraph& graph, int m) {
    if (m < 3) throw std::invalid_argument("gen_blowup: m must be >= 3");
    if (!graph.is_graph())
        throw std::invalid_argument("gen_blowup: input must be a graph (all edges size 2)");

    const int k = (m + 1) / 2;
    const int n = graph.vertex_count() * k;
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(graph.edge_count()));
    for (const auto& e : graph.edges()) {
        std::vector<int> big;
        big.reserve(static_cast<size_t>(2 * k));
        for (int v : e)
            for (int i = 0; i < k; ++i) big.push_back(v * k + i);
        edges.push_back(std::move(big));
    }
    return Blowup{Hypergraph(n, std::move(edges)), k};
}

} // namespace hypermix
