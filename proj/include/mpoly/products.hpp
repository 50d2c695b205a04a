#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpoly/graph.hpp"

namespace mpoly {

enum class ProductKind {
    cartesian,
    direct,
    strong,
    lexicographic,
    symmetric_difference,  // XOR
    disjunction,           // OR
    sierpinski,
};

inline const char* to_string(ProductKind k) {
    switch (k) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::symmetric_difference: return "xor";
        case ProductKind::disjunction: return "or";
        case ProductKind::sierpinski: return "sierpinski";
    }
    return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
    if (s == "cartesian") return ProductKind::cartesian;
    if (s == "direct") return ProductKind::direct;
    if (s == "strong") return ProductKind::strong;
    if (s == "lexicographic") return ProductKind::lexicographic;
    if (s == "xor") return ProductKind::symmetric_difference;
    if (s == "or") return ProductKind::disjunction;
    if (s == "sierpinski") return ProductKind::sierpinski;
    return std::nullopt;
}

constexpr ProductKind kAllProductKinds[] = {
    ProductKind::cartesian,     ProductKind::direct,
    ProductKind::strong,        ProductKind::lexicographic,
    ProductKind::symmetric_difference, ProductKind::disjunction,
    ProductKind::sierpinski,
};

/// Total function f: V(G) -> V(H) steering the Sierpinski product.
struct SierpinskiMap {
    std::vector<int> image;  // image[g] in [0, n_H)

    static SierpinskiMap constant(int n_g, int target) {
        return {std::vector<int>(static_cast<std::size_t>(n_g), target)};
    }
    static SierpinskiMap identity_like(int n_g, int n_h) {
        SierpinskiMap f;
        f.image.resize(static_cast<std::size_t>(n_g));
        for (int v = 0; v < n_g; ++v) f.image[static_cast<std::size_t>(v)] = v % n_h;
        return f;
    }
    int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }

    void validate(int n_g, int n_h) const {
        if (static_cast<int>(image.size()) != n_g)
            throw std::invalid_argument("sierpinski map must assign every vertex of the first factor");
        for (int v : image)
            if (v < 0 || v >= n_h)
                throw std::invalid_argument("sierpinski map image vertex " + std::to_string(v) +
                                            " out of range");
    }
};

namespace detail {

inline void require_map(ProductKind kind, const SierpinskiMap* f, const Graph& g, const Graph& h) {
    if (kind == ProductKind::sierpinski) {
        if (!f) throw std::invalid_argument("sierpinski product requires a vertex map");
        f->validate(g.order(), h.order());
    } else if (f) {
        throw std::invalid_argument(std::string("product '") + to_string(kind) +
                                    "' does not take a vertex map");
    }
}

/// c(g,h): G-neighbors of g mapped onto h.
inline int connecting_count(const Graph& g, const SierpinskiMap& f, int gv, int hv) {
    int c = 0;
    for (int w : g.neighbors(gv))
        if (f(w) == hv) ++c;
    return c;
}

}  // namespace detail

/// Build the product graph on V(G) x V(H); vertex (g,h) has index g*n_H + h.
inline Graph build_product(ProductKind kind, const Graph& g, const Graph& h,
                           const SierpinskiMap* f = nullptr) {
    detail::require_map(kind, f, g, h);
    const int ng = g.order();
    const int nh = h.order();
    const long long nv = static_cast<long long>(ng) * nh;
    if (nv > 2'000'000)
        throw std::invalid_argument("product graph too large to construct explicitly");
    auto idx = [nh](int gv, int hv) { return gv * nh + hv; };

    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case ProductKind::cartesian:
        case ProductKind::strong:
            for (int gv = 0; gv < ng; ++gv)
                for (const auto& [h1, h2] : h.edges()) edges.emplace_back(idx(gv, h1), idx(gv, h2));
            for (const auto& [g1, g2] : g.edges())
                for (int hv = 0; hv < nh; ++hv) edges.emplace_back(idx(g1, hv), idx(g2, hv));
            if (kind == ProductKind::cartesian) break;
            [[fallthrough]];
        case ProductKind::direct:
            for (const auto& [g1, g2] : g.edges())
                for (const auto& [h1, h2] : h.edges()) {
                    edges.emplace_back(idx(g1, h1), idx(g2, h2));
                    edges.emplace_back(idx(g1, h2), idx(g2, h1));
                }
            break;
        case ProductKind::lexicographic:
            for (int gv = 0; gv < ng; ++gv)
                for (const auto& [h1, h2] : h.edges()) edges.emplace_back(idx(gv, h1), idx(gv, h2));
            for (const auto& [g1, g2] : g.edges())
                for (int h1 = 0; h1 < nh; ++h1)
                    for (int h2 = 0; h2 < nh; ++h2) edges.emplace_back(idx(g1, h1), idx(g2, h2));
            break;
        case ProductKind::symmetric_difference:
        case ProductKind::disjunction:
            // Dense by nature; direct pair enumeration is the trusted oracle
            // at desk scale.
            for (long long a = 0; a < nv; ++a)
                for (long long b = a + 1; b < nv; ++b) {
                    const int g1 = static_cast<int>(a) / nh, h1 = static_cast<int>(a) % nh;
                    const int g2 = static_cast<int>(b) / nh, h2 = static_cast<int>(b) % nh;
                    const bool in_g = g.adjacent(g1, g2);
                    const bool in_h = h.adjacent(h1, h2);
                    const bool adj = kind == ProductKind::symmetric_difference
                                         ? (in_g != in_h)
                                         : (in_g || in_h);
                    if (adj) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
            break;
        case ProductKind::sierpinski:
            for (int gv = 0; gv < ng; ++gv)
                for (const auto& [h1, h2] : h.edges()) edges.emplace_back(idx(gv, h1), idx(gv, h2));
            for (const auto& [g1, g2] : g.edges())
                edges.emplace_back(idx(g1, (*f)(g2)), idx(g2, (*f)(g1)));
            break;
    }
    Graph p = Graph::from_edge_list(static_cast<int>(nv), edges);
    if (kind == ProductKind::sierpinski &&
        p.edge_count() != static_cast<long long>(ng) * h.edge_count() + g.edge_count())
        throw std::logic_error("sierpinski inner and connecting edges collided");
    return p;
}

/// Closed-form degree of vertex (gv,hv) in the product, from the factor
/// degrees alone.
inline long long predicted_degree(ProductKind kind, const Graph& g, const Graph& h,
                                  const SierpinskiMap* f, int gv, int hv) {
    detail::require_map(kind, f, g, h);
    const long long i = g.degree(gv);
    const long long j = h.degree(hv);
    const long long ng = g.order();
    const long long nh = h.order();
    switch (kind) {
        case ProductKind::cartesian: return i + j;
        case ProductKind::direct: return i * j;
        case ProductKind::strong: return i + j + i * j;
        case ProductKind::lexicographic: return nh * i + j;
        case ProductKind::symmetric_difference: return nh * i + ng * j - 2 * i * j;
        case ProductKind::disjunction: return nh * i + ng * j - i * j;
        case ProductKind::sierpinski: return j + detail::connecting_count(g, *f, gv, hv);
    }
    throw std::invalid_argument("unknown product kind");
}

/// Closed-form |E| of the product (for XOR/OR this is half the sum of the
/// predicted degrees).
inline long long product_edge_count(ProductKind kind, const Graph& g, const Graph& h) {
    const long long eg = g.edge_count();
    const long long eh = h.edge_count();
    const long long ng = g.order();
    const long long nh = h.order();
    switch (kind) {
        case ProductKind::cartesian: return eg * nh + eh * ng;
        case ProductKind::direct: return 2 * eg * eh;
        case ProductKind::strong: return eg * nh + eh * ng + 2 * eg * eh;
        case ProductKind::lexicographic: return eg * nh * nh + ng * eh;
        case ProductKind::symmetric_difference: return eg * nh * nh + eh * ng * ng - 4 * eg * eh;
        case ProductKind::disjunction: return eg * nh * nh + eh * ng * ng - 2 * eg * eh;
        case ProductKind::sierpinski: return ng * eh + eg;
    }
    throw std::invalid_argument("unknown product kind");
}

}  // namespace mpoly
