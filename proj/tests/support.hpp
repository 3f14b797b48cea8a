#ifndef GLTC_TESTS_SUPPORT_HPP
#define GLTC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gltc/generate.hpp"
#include "gltc/instance.hpp"

namespace gltc::testing {

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

/// K_{1,leaves} with center 0
inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

/// Vertices are the edges of g, adjacent when they share an endpoint. Always claw-free.
inline Graph line_graph(const Graph &g) {
    const auto &e = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return Graph(static_cast<int>(e.size()), edges);
}

inline LabelSet range_labels(int first, int last) {
    LabelSet labels;
    for (int l = first; l <= last; ++l)
        labels.push_back(l);
    return labels;
}

/// Same list on every vertex, same difference set on every edge.
inline Instance uniform_instance(const Graph &g, const LabelSet &labels, const DiffSet &diffs) {
    return Instance(g, std::vector<LabelSet>(static_cast<std::size_t>(g.vertex_count()), labels),
                    std::vector<DiffSet>(g.edge_count(), diffs));
}

/// The seeded corpus shared by the randomized tests: n in 1..max_n, tau in
/// 0..3, lmax in 2..12, density cycling through 0.2, 0.5, 0.8.
inline Instance corpus_instance(std::uint64_t seed, int max_n = 8) {
    GeneratorParams p;
    p.n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n));
    p.tau = static_cast<int>((seed / 3) % 4);
    p.lmax = 2 + static_cast<int>((seed * 7) % 11);
    static constexpr double densities[] = {0.2, 0.5, 0.8};
    p.density = densities[seed % 3];
    return generate_instance(p, seed);
}

} // namespace gltc::testing

#endif
