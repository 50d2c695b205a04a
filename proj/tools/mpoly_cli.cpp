// Command-line front end: compute M/degree polynomials, build products,
// verify the closed-form formulas against brute force, extract indices,
// print the path-product golden forms, and benchmark formula vs direct
// routes.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpoly/mpoly.hpp"

namespace {

using namespace mpoly;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GraphFormat parse_format(const std::string& s) {
    if (s == "edge-list") return GraphFormat::edge_list;
    if (s == "graph6") return GraphFormat::graph6;
    throw InputError("unknown graph format '" + s + "'");
}

enum class Emit { text, json, latex };

Emit parse_emit(const std::string& s) {
    if (s == "text") return Emit::text;
    if (s == "json") return Emit::json;
    if (s == "latex") return Emit::latex;
    throw InputError("unknown emit format '" + s + "'");
}

std::string render(const BiPoly& p, Emit emit) {
    switch (emit) {
        case Emit::text: return p.to_text();
        case Emit::json: return p.to_json();
        case Emit::latex: return p.to_latex();
    }
    return {};
}

ProductKind require_kind(const std::string& s) {
    auto k = parse_product_kind(s);
    if (!k)
        throw InputError("unknown product kind '" + s +
                         "' (expected cartesian|direct|strong|lexicographic|xor|or|sierpinski)");
    return *k;
}

Graph load_graph(const std::string& path, const std::string& format) {
    try {
        return read_graph_file(path, parse_format(format));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

std::optional<SierpinskiMap> load_map(const std::string& path, const Graph& g, const Graph& h) {
    if (path.empty()) return std::nullopt;
    try {
        return read_sierpinski_map(path, g.order(), h.order());
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

/// Monomials where the two polynomials disagree, one per line.
void print_diff(const BiPoly& a, const BiPoly& b, const char* na, const char* nb) {
    const BiPoly d = a - b;
    for (const auto& [k, c] : d.terms())
        std::cout << "  x^" << k.first << " y^" << k.second << ": " << na << '-' << nb << " = "
                  << c << '\n';
}

std::string fraction_with_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
    return r.str() + " (" + buf + ")";
}

int cmd_compute(const std::string& input, const std::string& format, const std::string& emit_s) {
    const Graph g = load_graph(input, format);
    const Emit emit = parse_emit(emit_s);
    const BiPoly m = m_polynomial(g);
    const UniPoly d = degree_polynomial(g);
    switch (emit) {
        case Emit::text:
            std::cout << "M = " << m.to_text() << '\n';
            std::cout << "D = " << d.to_text() << '\n';
            break;
        case Emit::json: {
            std::cout << "{\"m_polynomial\":" << m.to_json() << ",\"degree_polynomial\":{\"terms\":[";
            bool first = true;
            for (const auto& [e, c] : d.terms()) {
                if (!first) std::cout << ',';
                first = false;
                std::cout << "{\"i\":" << e << ",\"c\":" << c << '}';
            }
            std::cout << "]}}\n";
            break;
        }
        case Emit::latex:
            std::cout << "M = " << m.to_latex() << '\n';
            std::cout << "D = " << d.to_text("t") << '\n';
            break;
    }
    return kExitOk;
}

int cmd_product(const std::string& kind_s, const std::string& left, const std::string& right,
                const std::string& map_path, const std::string& engine,
                const std::string& emit_s, const std::string& format,
                const std::string& out_edges) {
    const ProductKind kind = require_kind(kind_s);
    const Graph g = load_graph(left, format);
    const Graph h = load_graph(right, format);
    const auto f = load_map(map_path, g, h);
    const SierpinskiMap* fp = f ? &*f : nullptr;
    const Emit emit = parse_emit(emit_s);
    if (engine != "formula" && engine != "direct" && engine != "both")
        throw InputError("unknown engine '" + engine + "' (expected formula|direct|both)");

    std::optional<Graph> built;
    auto build = [&]() -> const Graph& {
        if (!built) built = build_product(kind, g, h, fp);
        return *built;
    };

    int rc = kExitOk;
    try {
        if (engine == "formula") {
            std::cout << render(product_m_polynomial(kind, g, h, fp), emit) << '\n';
        } else if (engine == "direct") {
            std::cout << render(m_polynomial(build()), emit) << '\n';
        } else {
            const BiPoly formula = product_m_polynomial(kind, g, h, fp);
            const BiPoly direct = m_polynomial(build());
            std::cout << "formula: " << render(formula, emit) << '\n';
            std::cout << "direct:  " << render(direct, emit) << '\n';
            if (formula == direct) {
                std::cout << "MATCH\n";
            } else {
                std::cout << "MISMATCH\n";
                print_diff(formula, direct, "formula", "direct");
                rc = kExitMismatch;
            }
        }
        if (!out_edges.empty()) {
            std::ofstream out(out_edges);
            if (!out) throw InputError("cannot open output file '" + out_edges + "'");
            write_edge_list(out, build());
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return rc;
}

int cmd_verify(const std::string& kinds_s, const std::string& left, const std::string& right,
               const std::string& map_path, const std::string& format) {
    const Graph g = load_graph(left, format);
    const Graph h = load_graph(right, format);
    const auto f = load_map(map_path, g, h);

    std::vector<ProductKind> kinds;
    if (kinds_s == "all") {
        kinds.assign(std::begin(kAllProductKinds), std::end(kAllProductKinds));
    } else {
        std::string item;
        std::istringstream ss(kinds_s);
        while (std::getline(ss, item, ',')) kinds.push_back(require_kind(item));
    }

    bool all_match = true;
    for (ProductKind kind : kinds) {
        const SierpinskiMap* fp = nullptr;
        if (kind == ProductKind::sierpinski) {
            if (!f) throw InputError("sierpinski verification requires --map");
            fp = &*f;
        }
        BiPoly formula, oracle;
        try {
            formula = product_m_polynomial(kind, g, h, fp);
            oracle = m_polynomial(build_product(kind, g, h, fp));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (formula == oracle) {
            std::cout << to_string(kind) << ": MATCH\n";
        } else {
            all_match = false;
            std::cout << to_string(kind) << ": MISMATCH\n";
            const BiPoly d = formula - oracle;
            for (const auto& [k, c] : d.terms())
                std::cout << "  x^" << k.first << " y^" << k.second
                          << ": formula-oracle = " << c << '\n';
        }
    }
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_indices(const std::string& input, const std::string& format, const std::string& kind_s) {
    const Graph g = load_graph(input, format);
    const BiPoly m = m_polynomial(g);
    std::vector<IndexKind> kinds;
    if (kind_s == "all") {
        kinds.assign(kAllIndexKinds.begin(), kAllIndexKinds.end());
    } else {
        auto k = parse_index_kind(kind_s);
        if (!k) throw InputError("unknown index kind '" + kind_s + "'");
        kinds.push_back(*k);
    }
    for (IndexKind k : kinds)
        std::cout << to_string(k) << " = " << fraction_with_decimal(index_value(m, k)) << '\n';
    return kExitOk;
}

int cmd_golden(const std::string& kind_s, long long m, long long n, const std::string& map_s,
               bool check) {
    const ProductKind kind = require_kind(kind_s);
    PathProductSpec spec{kind, m, n, PathMapKind::constant};
    if (kind == ProductKind::sierpinski) {
        if (map_s == "constant") spec.map_kind = PathMapKind::constant;
        else if (map_s == "identity") spec.map_kind = PathMapKind::identity;
        else throw InputError("sierpinski golden requires --map constant|identity");
    }
    BiPoly golden;
    try {
        golden = golden_mpoly(spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::cout << "M = " << golden.to_text() << '\n';
    if (!check) return kExitOk;

    const Graph pg = path_graph(static_cast<int>(m));
    const Graph ph = path_graph(static_cast<int>(n));
    std::optional<SierpinskiMap> f;
    if (kind == ProductKind::sierpinski)
        f = spec.map_kind == PathMapKind::constant
                ? SierpinskiMap::constant(pg.order(), 0)
                : SierpinskiMap::identity_like(pg.order(), ph.order());
    const SierpinskiMap* fp = f ? &*f : nullptr;
    const BiPoly engine = product_m_polynomial(kind, pg, ph, fp);
    const BiPoly oracle = m_polynomial(build_product(kind, pg, ph, fp));
    const bool ok = golden == engine && engine == oracle;
    std::cout << "engine: " << (golden == engine ? "MATCH" : "MISMATCH") << '\n';
    std::cout << "oracle: " << (engine == oracle ? "MATCH" : "MISMATCH") << '\n';
    return ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const std::string& kind_s, const std::string& left, const std::string& right,
              const std::string& map_path, const std::string& format, int repeat) {
    const ProductKind kind = require_kind(kind_s);
    const Graph g = load_graph(left, format);
    const Graph h = load_graph(right, format);
    const auto f = load_map(map_path, g, h);
    BenchResult r;
    try {
        r = run_bench(kind, g, h, f ? &*f : nullptr, repeat);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::printf("%s,%d,%d,%lld,%.4f,%.4f,%.2f\n", to_string(kind), g.order(), h.order(), r.edges,
                r.formula_ms, r.direct_ms, r.ratio());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"M-polynomials of graph products: formulas, oracles, indices"};
    app.require_subcommand(1);

    std::string input, left, right, map_path, out_edges;
    std::string format = "edge-list";
    std::string emit = "text";
    std::string kind, engine = "formula", kinds = "all", index_kind = "all", golden_map = "constant";
    long long m = 0, n = 0;
    int repeat = 3;
    bool check = false;

    auto* compute = app.add_subcommand("compute", "M-polynomial and degree polynomial of a graph");
    compute->add_option("--input", input, "graph file")->required();
    compute->add_option("--format", format, "edge-list|graph6");
    compute->add_option("--emit", emit, "text|json|latex");

    auto* product = app.add_subcommand("product", "M-polynomial of a product of two graphs");
    product->add_option("--kind", kind, "product kind")->required();
    product->add_option("--left", left, "first factor file")->required();
    product->add_option("--right", right, "second factor file")->required();
    product->add_option("--map", map_path, "sierpinski map file");
    product->add_option("--engine", engine, "formula|direct|both");
    product->add_option("--emit", emit, "text|json|latex");
    product->add_option("--format", format, "edge-list|graph6");
    product->add_option("--out-edges", out_edges, "write the built product's edge list here");

    auto* verify = app.add_subcommand("verify", "formula vs brute force for selected kinds");
    verify->add_option("--kinds", kinds, "all or comma-separated kinds");
    verify->add_option("--left", left, "first factor file")->required();
    verify->add_option("--right", right, "second factor file")->required();
    verify->add_option("--map", map_path, "sierpinski map file");
    verify->add_option("--format", format, "edge-list|graph6");

    auto* indices = app.add_subcommand("indices", "degree-based topological indices");
    indices->add_option("--input", input, "graph file")->required();
    indices->add_option("--kind", index_kind, "all or a single index tag");
    indices->add_option("--format", format, "edge-list|graph6");

    auto* golden = app.add_subcommand("golden", "closed-form path-product M-polynomial");
    golden->add_option("--kind", kind, "product kind")->required();
    golden->add_option("--m", m, "order of the first path")->required();
    golden->add_option("--n", n, "order of the second path")->required();
    golden->add_option("--map", golden_map, "constant|identity (sierpinski only)");
    golden->add_flag("--check", check, "also run formula engine and brute force");

    auto* bench = app.add_subcommand("bench", "time formula route vs direct route");
    bench->add_option("--kind", kind, "product kind")->required();
    bench->add_option("--left", left, "first factor file")->required();
    bench->add_option("--right", right, "second factor file")->required();
    bench->add_option("--map", map_path, "sierpinski map file");
    bench->add_option("--format", format, "edge-list|graph6");
    bench->add_option("--repeat", repeat, "runs per route (best kept)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(input, format, emit);
        if (app.got_subcommand(product))
            return cmd_product(kind, left, right, map_path, engine, emit, format, out_edges);
        if (app.got_subcommand(verify)) return cmd_verify(kinds, left, right, map_path, format);
        if (app.got_subcommand(indices)) return cmd_indices(input, format, index_kind);
        if (app.got_subcommand(golden)) return cmd_golden(kind, m, n, golden_map, check);
        if (app.got_subcommand(bench))
            return cmd_bench(kind, left, right, map_path, format, repeat);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
