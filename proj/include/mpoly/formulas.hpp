#pragma once

#include <vector>

#include "mpoly/bipoly.hpp"
#include "mpoly/degree_counts.hpp"
#include "mpoly/graph.hpp"
#include "mpoly/products.hpp"

namespace mpoly {

// Every route in this header computes the product's M-polynomial from
// factor-level data only (degree polynomials, edge-type tables, nonadjacent
// tables, the factor M-polynomials) — never from the product graph itself.

/// Closed-form vertex degrees in the XOR and OR products.
struct ProductDegree {
    Int n_g;
    Int n_h;
    Int delta_xor(Int i, Int j) const {
        return checked_sub(checked_add(checked_mul(i, n_h), checked_mul(j, n_g)),
                           checked_mul(2, checked_mul(i, j)));
    }
    Int delta_or(Int i, Int j) const {
        return checked_sub(checked_add(checked_mul(i, n_h), checked_mul(j, n_g)),
                           checked_mul(i, j));
    }
};

/// M(G x H) = D_G(xy) M(H;x,y) + D_H(xy) M(G;x,y)  for the Cartesian box.
inline BiPoly m_cartesian(const Graph& g, const Graph& h) {
    const BiPoly mg = m_polynomial(g);
    const BiPoly mh = m_polynomial(h);
    const BiPoly dg = BiPoly::lift_diagonal(degree_polynomial(g), 1);
    const BiPoly dh = BiPoly::lift_diagonal(degree_polynomial(h), 1);
    return (dg * mh + dh * mg).canonical_m_form();
}

/// The same polynomial by the strong-product specialization: two explicit
/// double sums with additive exponents, no direct-edge part.
inline BiPoly m_cartesian_via_strong(const Graph& g, const Graph& h) {
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    const auto dg = degree_polynomial(g);
    const auto dh = degree_polynomial(h);
    BiPoly total;
    for (const auto& [j, nj] : dh.terms())
        for (const auto& [ii, cnt] : mg)
            total.add_term_ordered(checked_add(ii.first, j), checked_add(ii.second, j),
                                   checked_mul(nj, cnt));
    for (const auto& [i, ni] : dg.terms())
        for (const auto& [jj, cnt] : mh)
            total.add_term_ordered(checked_add(jj.first, i), checked_add(jj.second, i),
                                   checked_mul(ni, cnt));
    return total;
}

/// Direct product: each pair of factor edge types contributes the two
/// pairings {i1 j1, i2 j2} and {i1 j2, i2 j1}. The first pairing is already
/// ordered, so it collapses to M(H; x^{i1}, y^{i2}); the second is summed
/// explicitly.
inline BiPoly m_direct(const Graph& g, const Graph& h) {
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    const BiPoly mh_poly = m_polynomial(h);
    BiPoly total;
    for (const auto& [ii, cg] : mg) {
        const Int i1 = ii.first, i2 = ii.second;
        total += mh_poly.substitute_powers(i1, i2).scaled(cg);
        for (const auto& [jj, ch] : mh) {
            const Int a = checked_mul(i1, jj.second);
            const Int b = checked_mul(i2, jj.first);
            total.add_term_ordered(a, b, checked_mul(cg, ch));
        }
    }
    return total.canonical_m_form();
}

/// The three edge classes of the strong product: G-layer edges, H-layer
/// edges, and direct-type edges.
struct StrongParts {
    BiPoly g_layer;
    BiPoly h_layer;
    BiPoly cross;
    BiPoly total() const { return (g_layer + h_layer + cross).canonical_m_form(); }
};

/// Compact per-class sums: the layer classes via x^j y^j M(.;x^{1+j},y^{1+j}),
/// the direct class via x^{i1} y^{i2} M(H;x^{1+i1},y^{1+i2}) plus the
/// explicit second pairing.
inline StrongParts m_strong_parts(const Graph& g, const Graph& h) {
    const BiPoly mg_poly = m_polynomial(g);
    const BiPoly mh_poly = m_polynomial(h);
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    StrongParts parts;
    for (const auto& [j, nj] : degree_polynomial(h).terms())
        parts.g_layer += mg_poly.substitute_powers(1 + j, 1 + j).shifted(j, j).scaled(nj);
    for (const auto& [i, ni] : degree_polynomial(g).terms())
        parts.h_layer += mh_poly.substitute_powers(1 + i, 1 + i).shifted(i, i).scaled(ni);
    for (const auto& [ii, cg] : mg) {
        const Int i1 = ii.first, i2 = ii.second;
        parts.cross += mh_poly.substitute_powers(1 + i1, 1 + i2).shifted(i1, i2).scaled(cg);
        for (const auto& [jj, ch] : mh) {
            const Int j1 = jj.first, j2 = jj.second;
            const Int f12 = i1 + j2 + checked_mul(i1, j2);
            const Int f21 = i2 + j1 + checked_mul(i2, j1);
            parts.cross.add_term_ordered(f12, f21, checked_mul(cg, ch));
        }
    }
    return parts;
}

/// The raw min/max double sums for the three strong-product classes, kept
/// as an independent transcription of the same result for verification.
inline StrongParts m_strong_parts_expanded(const Graph& g, const Graph& h) {
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    StrongParts parts;
    for (const auto& [j, nj] : degree_polynomial(h).terms())
        for (const auto& [ii, cnt] : mg) {
            const Int d1 = ii.first + j + checked_mul(ii.first, j);
            const Int d2 = ii.second + j + checked_mul(ii.second, j);
            parts.g_layer.add_term_ordered(d1, d2, checked_mul(nj, cnt));
        }
    for (const auto& [i, ni] : degree_polynomial(g).terms())
        for (const auto& [jj, cnt] : mh) {
            const Int e1 = i + jj.first + checked_mul(i, jj.first);
            const Int e2 = i + jj.second + checked_mul(i, jj.second);
            parts.h_layer.add_term_ordered(e1, e2, checked_mul(ni, cnt));
        }
    for (const auto& [ii, cg] : mg)
        for (const auto& [jj, ch] : mh) {
            const Int i1 = ii.first, i2 = ii.second, j1 = jj.first, j2 = jj.second;
            const Int f11 = i1 + j1 + checked_mul(i1, j1);
            const Int f22 = i2 + j2 + checked_mul(i2, j2);
            const Int f12 = i1 + j2 + checked_mul(i1, j2);
            const Int f21 = i2 + j1 + checked_mul(i2, j1);
            const Int c = checked_mul(cg, ch);
            parts.cross.add_term_ordered(f11, f22, c);
            parts.cross.add_term_ordered(f12, f21, c);
        }
    return parts;
}

inline BiPoly m_strong(const Graph& g, const Graph& h) { return m_strong_parts(g, h).total(); }

/// Lexicographic product, compact form:
///   M(G[H]) = M(H;x,y) D_G((xy)^{n_H}) + M(G;x^{n_H},y^{n_H}) D_H(x) D_H(y).
inline BiPoly m_lexicographic(const Graph& g, const Graph& h) {
    const Int nh = h.order();
    const BiPoly layer = m_polynomial(h) * BiPoly::lift_diagonal(degree_polynomial(g), nh);
    const BiPoly between = m_polynomial(g).substitute_powers(nh, nh) *
                           BiPoly::split_univariate(degree_polynomial(h), BiPoly::Var::x) *
                           BiPoly::split_univariate(degree_polynomial(h), BiPoly::Var::y);
    return (layer + between).canonical_m_form();
}

/// Lexicographic product as the direct double sum over H-layer edges and
/// between-layer edges. The between-layer part ranges over ordered degree
/// pairs (j1,j2) of H: with the G-edge endpoints labeled i1 <= i2, each
/// choice of an H-vertex over each endpoint yields one distinct edge.
inline BiPoly m_lexicographic_double_sum(const Graph& g, const Graph& h) {
    const Int nh = h.order();
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    const auto dh = degree_polynomial(h);
    BiPoly total;
    for (const auto& [i, ni] : degree_polynomial(g).terms())
        for (const auto& [jj, cnt] : mh)
            total.add_term_ordered(checked_add(jj.first, checked_mul(i, nh)),
                                   checked_add(jj.second, checked_mul(i, nh)),
                                   checked_mul(ni, cnt));
    for (const auto& [ii, cg] : mg)
        for (const auto& [j1, n1] : dh.terms())
            for (const auto& [j2, n2] : dh.terms())
                total.add_term_ordered(checked_add(j1, checked_mul(ii.first, nh)),
                                       checked_add(j2, checked_mul(ii.second, nh)),
                                       checked_mul(cg, checked_mul(n1, n2)));
    return total;
}

enum class NonadjacentSource { direct_count, via_complement };

/// Symmetric-difference (XOR) product: unordered edge types of one factor
/// against ordered nonadjacent degree types of the other.
inline BiPoly m_xor(const Graph& g, const Graph& h,
                    NonadjacentSource src = NonadjacentSource::direct_count) {
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    const auto hat_g = src == NonadjacentSource::direct_count ? nonadjacent_ordered_counts(g)
                                                              : nonadjacent_via_complement(g);
    const auto hat_h = src == NonadjacentSource::direct_count ? nonadjacent_ordered_counts(h)
                                                              : nonadjacent_via_complement(h);
    const ProductDegree deg{g.order(), h.order()};
    BiPoly total;
    for (const auto& [ii, cg] : mg)
        for (const auto& [jj, ch] : hat_h) {
            total.add_term_ordered(deg.delta_xor(ii.first, jj.first),
                                   deg.delta_xor(ii.second, jj.second), checked_mul(cg, ch));
        }
    for (const auto& [jj, ch] : mh)
        for (const auto& [ii, cg] : hat_g) {
            total.add_term_ordered(deg.delta_xor(ii.first, jj.first),
                                   deg.delta_xor(ii.second, jj.second), checked_mul(cg, ch));
        }
    return total;
}

/// Disjunction (OR) product by inclusion-exclusion: edges seen from G, plus
/// edges seen from H, minus the doubly-counted intersection.
inline BiPoly m_or(const Graph& g, const Graph& h) {
    const auto mg = edge_type_counts(g);
    const auto mh = edge_type_counts(h);
    const auto dg = degree_polynomial(g);
    const auto dh = degree_polynomial(h);
    const ProductDegree deg{g.order(), h.order()};
    BiPoly total;
    for (const auto& [ii, cg] : mg)
        for (const auto& [j1, n1] : dh.terms())
            for (const auto& [j2, n2] : dh.terms()) {
                const Int a = deg.delta_or(ii.first, j1);
                const Int b = deg.delta_or(ii.second, j2);
                total.add_term_ordered(a, b, checked_mul(cg, checked_mul(n1, n2)));
            }
    for (const auto& [jj, ch] : mh)
        for (const auto& [i1, n1] : dg.terms())
            for (const auto& [i2, n2] : dg.terms()) {
                const Int a = deg.delta_or(i1, jj.first);
                const Int b = deg.delta_or(i2, jj.second);
                total.add_term_ordered(a, b, checked_mul(ch, checked_mul(n1, n2)));
            }
    for (const auto& [ii, cg] : mg)
        for (const auto& [jj, ch] : mh) {
            const Int c = checked_mul(cg, ch);
            const Int a1 = deg.delta_or(ii.first, jj.first);
            const Int b1 = deg.delta_or(ii.second, jj.second);
            total.add_term_ordered(a1, b1, checked_sub(0, c));
            const Int a2 = deg.delta_or(ii.first, jj.second);
            const Int b2 = deg.delta_or(ii.second, jj.first);
            total.add_term_ordered(a2, b2, checked_sub(0, c));
        }
    return total;
}

struct SierpinskiParts {
    BiPoly inner;
    BiPoly connecting;
    BiPoly total() const { return (inner + connecting).canonical_m_form(); }
};

/// Sierpinski product: degrees d(g,h) = deg_H(h) + c(g,h) are derived from
/// the factors and the map; the product graph is never constructed.
inline SierpinskiParts m_sierpinski_parts(const Graph& g, const Graph& h, const SierpinskiMap& f) {
    f.validate(g.order(), h.order());
    std::vector<std::vector<int>> c(static_cast<std::size_t>(g.order()),
                                    std::vector<int>(static_cast<std::size_t>(h.order()), 0));
    for (int gv = 0; gv < g.order(); ++gv)
        for (int w : g.neighbors(gv)) ++c[static_cast<std::size_t>(gv)][static_cast<std::size_t>(f(w))];
    auto d = [&](int gv, int hv) {
        return static_cast<Int>(h.degree(hv)) + c[static_cast<std::size_t>(gv)][static_cast<std::size_t>(hv)];
    };
    SierpinskiParts parts;
    const auto h_edges = h.edges();
    for (int gv = 0; gv < g.order(); ++gv)
        for (const auto& [h1, h2] : h_edges) {
            parts.inner.add_term_ordered(d(gv, h1), d(gv, h2), 1);
        }
    for (const auto& [g1, g2] : g.edges()) {
        parts.connecting.add_term_ordered(d(g1, f(g2)), d(g2, f(g1)), 1);
    }
    return parts;
}

inline BiPoly m_sierpinski(const Graph& g, const Graph& h, const SierpinskiMap& f) {
    return m_sierpinski_parts(g, h, f).total();
}

/// Formula-route dispatch used by the CLI and the verification harness.
inline BiPoly product_m_polynomial(ProductKind kind, const Graph& g, const Graph& h,
                                   const SierpinskiMap* f = nullptr) {
    detail::require_map(kind, f, g, h);
    switch (kind) {
        case ProductKind::cartesian: return m_cartesian(g, h);
        case ProductKind::direct: return m_direct(g, h);
        case ProductKind::strong: return m_strong(g, h);
        case ProductKind::lexicographic: return m_lexicographic(g, h);
        case ProductKind::symmetric_difference: return m_xor(g, h);
        case ProductKind::disjunction: return m_or(g, h);
        case ProductKind::sierpinski: return m_sierpinski(g, h, *f);
    }
    throw std::invalid_argument("unknown product kind");
}

}  // namespace mpoly
