#pragma once

// Deterministic graph corpus for property and acceptance tests: paths,
// cycles, complete graphs, stars and seeded G(n, 0.4) samples for
// 3 <= n <= 10, plus a few graphs with isolated vertices.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mpoly/graph.hpp"
#include "mpoly/products.hpp"

namespace corpus {

/// G(n, 0.4) from raw mt19937 draws so the corpus is identical on every
/// platform (std distributions are not portable).
inline mpoly::Graph erdos_renyi(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 5 < 2) edges.emplace_back(i, j);
    return mpoly::Graph::from_edge_list(n, edges);
}

struct NamedGraph {
    std::string name;
    mpoly::Graph graph;
};

/// Forty factor graphs: five families over orders 3..10.
inline std::vector<NamedGraph> factor_corpus() {
    std::vector<NamedGraph> out;
    for (int n = 3; n <= 10; ++n) {
        out.push_back({"P" + std::to_string(n), mpoly::path_graph(n)});
        out.push_back({"C" + std::to_string(n), mpoly::cycle_graph(n)});
        out.push_back({"K" + std::to_string(n), mpoly::complete_graph(n)});
        out.push_back({"S" + std::to_string(n), mpoly::star_graph(n + 1)});
        out.push_back({"G" + std::to_string(n), erdos_renyi(n, 1000u + static_cast<std::uint32_t>(n))});
    }
    return out;
}

/// Graphs with isolated vertices and no edges, for the complement-identity
/// checks.
inline std::vector<NamedGraph> isolated_corpus() {
    using mpoly::Graph;
    return {
        {"E1", Graph::from_edge_list(1, {})},
        {"E3", Graph::from_edge_list(3, {})},
        {"P3+K1", Graph::from_edge_list(4, {{0, 1}, {1, 2}})},
        {"P3+2K1", Graph::from_edge_list(5, {{0, 1}, {1, 2}})},
        {"K3+K1", Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}})},
    };
}

/// Deterministic factor pairs: at least 50, mixing all families.
inline std::vector<std::pair<NamedGraph, NamedGraph>> factor_pairs(std::size_t count = 56) {
    const auto graphs = factor_corpus();
    std::vector<std::pair<NamedGraph, NamedGraph>> pairs;
    for (std::size_t i = 0; i < count; ++i)
        pairs.emplace_back(graphs[(3 * i + 1) % graphs.size()], graphs[(7 * i + 2) % graphs.size()]);
    return pairs;
}

inline mpoly::SierpinskiMap random_map(int n_g, int n_h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    mpoly::SierpinskiMap f;
    f.image.resize(static_cast<std::size_t>(n_g));
    for (int v = 0; v < n_g; ++v)
        f.image[static_cast<std::size_t>(v)] = static_cast<int>(rng() % static_cast<std::uint32_t>(n_h));
    return f;
}

/// The three map flavours exercised per factor pair in the Sierpinski runs.
inline std::vector<mpoly::SierpinskiMap> sierpinski_maps(int n_g, int n_h, std::uint32_t seed) {
    return {mpoly::SierpinskiMap::constant(n_g, 0), mpoly::SierpinskiMap::identity_like(n_g, n_h),
            random_map(n_g, n_h, seed)};
}

}  // namespace corpus
