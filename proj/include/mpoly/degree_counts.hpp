#pragma once

#include <map>
#include <utility>

#include "mpoly/bipoly.hpp"
#include "mpoly/graph.hpp"

namespace mpoly {

/// Degree-pair keyed counts. For edge types the key is the unordered pair
/// {i,j} stored with i <= j; for ordered nonadjacent counts the key is the
/// ordered pair (i,j). Zero entries are never materialized.
using DegreePairCounts = std::map<std::pair<Int, Int>, Int>;

struct DegreeTypeTable {
    DegreePairCounts unordered;            // m_{i,j}
    DegreePairCounts ordered_nonadjacent;  // m-hat_{i,j}, pairs (g,g') with g=g' allowed
};

/// m_{i,j}(G): one pass over the edges against a precomputed degree array.
/// This is the brute-force oracle every product formula is judged against.
inline DegreePairCounts edge_type_counts(const Graph& g) {
    const auto deg = g.degree_sequence();
    DegreePairCounts counts;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                Int i = deg[static_cast<std::size_t>(u)];
                Int j = deg[static_cast<std::size_t>(v)];
                if (i > j) std::swap(i, j);
                counts[{i, j}] += 1;
            }
    return counts;
}

inline BiPoly m_polynomial(const Graph& g) {
    BiPoly m;
    for (const auto& [key, c] : edge_type_counts(g)) m.add_term(key.first, key.second, c);
    return m;
}

inline UniPoly degree_polynomial(const Graph& g) {
    UniPoly d;
    for (int v = 0; v < g.order(); ++v) d.add_term(g.degree(v), 1);
    return d;
}

/// Ordered nonadjacent degree-type numbers by definition: pairs (g,g') with
/// gg' not an edge, g = g' allowed.
inline DegreePairCounts nonadjacent_ordered_counts(const Graph& g) {
    const auto deg = g.degree_sequence();
    DegreePairCounts counts;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                counts[{deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]}] += 1;
    return counts;
}

/// The same table computed from the complement's edge-type numbers:
///   m-hat_{i,j} = m_{n-1-i, n-1-j}(complement)            for i != j,
///   m-hat_{i,i} = 2 m_{n-1-i, n-1-i}(complement) + n_i(G) for i = j.
/// Off the diagonal an unordered complement edge realizes the ordered pair
/// (i,j) exactly once, so no doubling factor applies there.
inline DegreePairCounts nonadjacent_via_complement(const Graph& g) {
    const Int n = g.order();
    const auto comp_counts = edge_type_counts(g.complement());
    DegreePairCounts counts;
    for (const auto& [key, c] : comp_counts) {
        // Complement degrees (a,b) with a <= b map back to G-degrees
        // i = n-1-b <= j = n-1-a.
        Int i = n - 1 - key.second;
        Int j = n - 1 - key.first;
        if (i == j) {
            counts[{i, i}] += checked_mul(2, c);
        } else {
            counts[{i, j}] += c;
            counts[{j, i}] += c;
        }
    }
    for (const auto& [d, cnt] : degree_polynomial(g).terms()) counts[{d, d}] += cnt;
    return counts;
}

inline DegreeTypeTable degree_type_table(const Graph& g) {
    return {edge_type_counts(g), nonadjacent_ordered_counts(g)};
}

}  // namespace mpoly
