#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpoly {

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; adjacency is kept as sorted neighbor lists plus, for small
/// orders, a bit matrix for O(1) membership tests.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 1) throw std::invalid_argument("graph order must be at least 1");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                            " out of range [0," + std::to_string(n) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                            " not allowed in a simple graph");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        g.finalize();
        return g;
    }

    int order() const { return n_; }
    long long edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check_vertex(v)]; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        if (!bits_.empty())
            return (bits_[bit_index(u, v) >> 6] >> (bit_index(u, v) & 63)) & 1u;
        const auto& nu = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    /// Edges as (u,v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) e.emplace_back(u, v);
        return from_edge_list(n_, e);
    }

    /// Sum over vertices of deg^2 etc. show up in index cross-checks.
    std::vector<int> degree_sequence() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    // Bit matrices above this order would dominate memory; membership then
    // falls back to binary search on the sorted lists.
    static constexpr int kBitMatrixLimit = 4096;

    std::size_t check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        return static_cast<std::size_t>(v);
    }

    std::size_t bit_index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    void finalize() {
        edge_count_ = 0;
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            edge_count_ += static_cast<long long>(nb.size());
        }
        edge_count_ /= 2;
        if (n_ <= kBitMatrixLimit) {
            bits_.assign((static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) + 63) / 64, 0);
            for (int u = 0; u < n_; ++u)
                for (int v : adj_[static_cast<std::size_t>(u)])
                    bits_[bit_index(u, v) >> 6] |= std::uint64_t{1} << (bit_index(u, v) & 63);
        }
    }

    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

enum class GraphKind { path, cycle, star, complete };

/// Standard families: P_n, C_n (n >= 3), the star K_{1,n-1} of order n with
/// center 0, and K_n.
inline Graph generate(GraphKind kind, int n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case GraphKind::path:
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
        case GraphKind::cycle:
            if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(n - 1, 0);
            break;
        case GraphKind::star:
            for (int i = 1; i < n; ++i) e.emplace_back(0, i);
            break;
        case GraphKind::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
            break;
    }
    return Graph::from_edge_list(n, e);
}

inline Graph path_graph(int n) { return generate(GraphKind::path, n); }
inline Graph cycle_graph(int n) { return generate(GraphKind::cycle, n); }
inline Graph star_graph(int n) { return generate(GraphKind::star, n); }
inline Graph complete_graph(int n) { return generate(GraphKind::complete, n); }

}  // namespace mpoly
