#pragma once

#include <stdexcept>

#include "mpoly/bipoly.hpp"
#include "mpoly/products.hpp"

namespace mpoly {

enum class PathMapKind { constant, identity };

/// A product of two paths P_m and P_n, m,n >= 3, with the map choice for
/// the Sierpinski case (constant sends everything to endpoint 0; identity
/// requires m <= n).
struct PathProductSpec {
    ProductKind kind;
    Int m;
    Int n;
    PathMapKind map_kind = PathMapKind::constant;
};

namespace golden_detail {

// P_n data for n >= 3: M = 2xy^2 + (n-3)x^2y^2, D = 2t + (n-2)t^2.
inline BiPoly path_m(Int n) {
    BiPoly p;
    p.add_term(1, 2, 2);
    p.add_term(2, 2, n - 3);
    return p;
}

inline UniPoly path_d(Int n) {
    UniPoly d;
    d.add_term(1, 2);
    d.add_term(2, n - 2);
    return d;
}

inline BiPoly cartesian(Int m, Int n) {
    const BiPoly a = BiPoly::lift_diagonal(path_d(m), 1) * path_m(n);
    const BiPoly b = BiPoly::lift_diagonal(path_d(n), 1) * path_m(m);
    return (a + b).canonical_m_form();
}

inline BiPoly direct(Int m, Int n) {
    BiPoly p;
    p.add_term(1, 4, 4);
    p.add_term(2, 2, 4);
    p.add_term(2, 4, checked_mul(4, m + n - 6));
    p.add_term(4, 4, checked_mul(2, checked_mul(m - 3, n - 3)));
    return p;
}

inline BiPoly strong(Int m, Int n) {
    BiPoly p;
    p.add_term(3, 5, 8);
    p.add_term(3, 8, 4);
    p.add_term(5, 5, checked_mul(2, m + n - 4));
    p.add_term(5, 8, 6 * m + 6 * n - 32);
    p.add_term(8, 8, checked_mul(4, checked_mul(m, n)) - 11 * m - 11 * n + 30);
    return p;
}

inline BiPoly lexicographic(Int m, Int n) {
    BiPoly p;
    p.add_term(n + 1, n + 2, 4);
    p.add_term(2 * n + 1, 2 * n + 2, checked_mul(2, m - 2));
    p.add_term(n + 2, n + 2, checked_mul(2, n - 3));
    p.add_term(2 * n + 2, 2 * n + 2, checked_mul(n - 3, m - 2));
    p.add_term(n + 1, 2 * n + 1, 8);
    p.add_term(n + 1, 2 * n + 2, checked_mul(4, n - 2));
    p.add_term(n + 2, 2 * n + 1, checked_mul(4, n - 2));
    p.add_term(n + 2, 2 * n + 2, checked_mul(2, checked_mul(n - 2, n - 2)));
    p.add_term(2 * n + 1, 2 * n + 1, checked_mul(4, m - 3));
    p.add_term(2 * n + 1, 2 * n + 2, checked_mul(2, checked_mul(m - 3, n - 2)));
    p.add_term(2 * n + 2, 2 * n + 1, checked_mul(2, checked_mul(m - 3, n - 2)));
    p.add_term(2 * n + 2, 2 * n + 2, checked_mul(m - 3, checked_mul(n - 2, n - 2)));
    return p.canonical_m_form();
}

inline BiPoly xor_product(Int m, Int n) {
    const Int A = m + n - 2;
    const Int B = n + 2 * m - 4;
    const Int C = m + 2 * n - 4;
    const Int D = 2 * m + 2 * n - 8;
    BiPoly p;
    p.add_term_ordered(A, B, 8);
    p.add_term_ordered(A, C, 8);
    p.add_term_ordered(A, D, checked_mul(4, m + n - 6));
    p.add_term_ordered(B, C, checked_mul(4, m + n - 6));
    p.add_term_ordered(B, D, 2 * n * n - 12 * n + 20 + checked_mul(4, checked_mul(m - 3, n - 3)));
    p.add_term_ordered(C, D, 2 * m * m - 12 * m + 20 + checked_mul(4, checked_mul(m - 3, n - 3)));
    p.add_term_ordered(C, C, checked_mul(4, m - 3));
    p.add_term_ordered(B, B, checked_mul(4, n - 3));
    p.add_term_ordered(D, D,
                       checked_mul(m - 3, n * n - 6 * n + 10) +
                           checked_mul(n - 3, m * m - 6 * m + 10));
    return p;
}

inline BiPoly or_product(Int m, Int n) {
    const Int A = m + n - 1;
    const Int B = 2 * m + n - 2;
    const Int C = m + 2 * n - 2;
    const Int D = 2 * m + 2 * n - 4;
    BiPoly p;
    p.add_term_ordered(A, B, 8);
    p.add_term_ordered(A, C, 8);
    p.add_term_ordered(A, D, checked_mul(4, m + n - 5));
    p.add_term_ordered(B, C, checked_mul(4, m + n - 5));
    p.add_term_ordered(B, D, 4 * m * n - 12 * m + 2 * n * n - 20 * n + 44);
    p.add_term_ordered(C, D, 2 * m * m + 4 * m * n - 20 * m - 12 * n + 44);
    p.add_term_ordered(B, B, checked_mul(4, n - 3));
    p.add_term_ordered(C, C, checked_mul(4, m - 3));
    p.add_term_ordered(D, D, m * m * n + m * n * n - 10 * m * n - 3 * m * m - 3 * n * n +
                                 22 * m + 22 * n - 42);
    return p;
}

inline BiPoly sierpinski_constant(Int m, Int n) {
    BiPoly p;
    p.add_term(1, 2, m);
    p.add_term(2, 2, checked_mul(m, n - 3) + 2);
    p.add_term(2, 3, m);
    p.add_term(3, 3, m - 3);
    return p;
}

inline BiPoly sierpinski_identity(Int m, Int n) {
    Int a12, a13, a22, a23, a33;
    if (n == m) {
        a12 = 2 * m - 6;
        a13 = 4;
        a22 = m * m - 7 * m + 14;
        a23 = 4 * m - 10;
        a33 = m - 3;
    } else if (n == m + 1) {
        a12 = 2 * m - 4;
        a13 = 3;
        a22 = m * m - 6 * m + 10;
        a23 = 4 * m - 8;
        a33 = m - 2;
    } else {  // n >= m + 2
        a12 = 2 * m - 3;
        a13 = 2;
        a22 = checked_mul(m, n) - 7 * m + 9;
        a23 = 4 * m - 7;
        a33 = m - 2;
    }
    BiPoly p;
    p.add_term(1, 2, a12);
    p.add_term(1, 3, a13);
    p.add_term(2, 2, a22);
    p.add_term(2, 3, a23);
    p.add_term(3, 3, a33);
    return p;
}

}  // namespace golden_detail

/// The published closed forms for products of paths, assembled numerically
/// at (m,n) into canonical M-form.
inline BiPoly golden_mpoly(const PathProductSpec& spec) {
    if (spec.m < 3 || spec.n < 3)
        throw std::invalid_argument("path products require orders m,n >= 3");
    using namespace golden_detail;
    switch (spec.kind) {
        case ProductKind::cartesian: return cartesian(spec.m, spec.n);
        case ProductKind::direct: return direct(spec.m, spec.n);
        case ProductKind::strong: return strong(spec.m, spec.n);
        case ProductKind::lexicographic: return lexicographic(spec.m, spec.n);
        case ProductKind::symmetric_difference: return xor_product(spec.m, spec.n);
        case ProductKind::disjunction: return or_product(spec.m, spec.n);
        case ProductKind::sierpinski:
            if (spec.map_kind == PathMapKind::constant) return sierpinski_constant(spec.m, spec.n);
            if (spec.m > spec.n)
                throw std::invalid_argument("identity-map form requires m <= n");
            return sierpinski_identity(spec.m, spec.n);
    }
    throw std::invalid_argument("unknown product kind");
}

}  // namespace mpoly
