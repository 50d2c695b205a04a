#pragma once

#include <chrono>

#include "mpoly/degree_counts.hpp"
#include "mpoly/formulas.hpp"
#include "mpoly/products.hpp"

namespace mpoly {

/// Wall times for the two routes to the product M-polynomial. The formula
/// route re-extracts the factor tables on every run so both sides are
/// measured end-to-end; the direct route builds the product and enumerates
/// its edges. Best-of-N is reported.
struct BenchResult {
    double formula_ms = 0;
    double direct_ms = 0;
    long long edges = 0;
    BiPoly formula_poly;
    BiPoly direct_poly;
    double ratio() const { return direct_ms / (formula_ms > 0 ? formula_ms : 1e-9); }
};

inline BenchResult run_bench(ProductKind kind, const Graph& g, const Graph& h,
                             const SierpinskiMap* f = nullptr, int repeat = 3) {
    using clock = std::chrono::steady_clock;
    if (repeat < 1) repeat = 1;
    BenchResult r;
    double best = -1;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = clock::now();
        r.formula_poly = product_m_polynomial(kind, g, h, f);
        const auto t1 = clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (best < 0 || ms < best) best = ms;
    }
    r.formula_ms = best;
    best = -1;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = clock::now();
        const Graph product = build_product(kind, g, h, f);
        r.direct_poly = m_polynomial(product);
        const auto t1 = clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (best < 0 || ms < best) best = ms;
        r.edges = product.edge_count();
    }
    r.direct_ms = best;
    return r;
}

}  // namespace mpoly
