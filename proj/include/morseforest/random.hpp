#pragma once

// Seeded generators for random small complexes and graphs.

#include "morseforest/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace morseforest {

/// k distinct top cells chosen uniformly among the d-subsets of
/// {0, ..., vertices-1}, closed downward.
inline SimplicialComplex random_pure_complex(std::mt19937_64& rng, int vertices, int d, std::size_t k) {
    auto pool = detail::subsets_of_size(vertices, d + 1);
    if (pool.empty() || k == 0)
        throw Error("random_pure_complex: nothing to choose");
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(k, pool.size()));
    std::sort(pool.begin(), pool.end());
    return SimplicialComplex::from_maximal_faces(pool);
}

/// Simple graph with each possible edge present independently with
/// probability p; all vertices are kept.
inline SimplicialComplex random_graph(std::mt19937_64& rng, int vertices, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<Vertex>> faces;
    for (Vertex v = 0; v < vertices; ++v)
        faces.push_back({v});
    for (Vertex a = 0; a < vertices; ++a)
        for (Vertex b = a + 1; b < vertices; ++b)
            if (coin(rng))
                faces.push_back({a, b});
    return SimplicialComplex::from_maximal_faces(faces);
}

/// Connected simple graph: a random spanning tree plus `extra` further
/// random edges (fewer if the graph becomes complete).
inline SimplicialComplex random_connected_graph(std::mt19937_64& rng, int vertices, std::size_t extra) {
    std::vector<std::vector<Vertex>> edges;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(vertices),
                                        std::vector<bool>(static_cast<std::size_t>(vertices), false));
    for (Vertex v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        const Vertex u = pick(rng);
        edges.push_back({u, v});
        used[u][v] = used[v][u] = true;
    }
    std::vector<std::vector<Vertex>> free_pairs;
    for (Vertex a = 0; a < vertices; ++a)
        for (Vertex b = a + 1; b < vertices; ++b)
            if (!used[a][b])
                free_pairs.push_back({a, b});
    std::shuffle(free_pairs.begin(), free_pairs.end(), rng);
    for (std::size_t i = 0; i < std::min(extra, free_pairs.size()); ++i)
        edges.push_back(free_pairs[i]);
    if (edges.empty())
        edges.push_back({0});
    return SimplicialComplex::from_maximal_faces(edges);
}

/// Pseudomanifolds found among random pure 2-complexes on `vertices`
/// vertices, after `trials` draws; duplicates removed.
inline std::vector<SimplicialComplex> random_pseudomanifolds(std::mt19937_64& rng, int vertices,
                                                             std::size_t trials) {
    const std::size_t pool = detail::subsets_of_size(vertices, 3).size();
    std::uniform_int_distribution<std::size_t> half(2, std::max<std::size_t>(2, pool / 2));
    std::vector<SimplicialComplex> found;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t k = 2 * half(rng);
        const SimplicialComplex K = random_pure_complex(rng, vertices, 2, k);
        if (!is_pseudomanifold(K))
            continue;
        if (std::find(found.begin(), found.end(), K) == found.end())
            found.push_back(K.renamed("random_pm(" + std::to_string(found.size()) + ")"));
    }
    return found;
}

} // namespace morseforest
