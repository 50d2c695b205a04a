#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mpoly/graph.hpp"
#include "mpoly/graph6.hpp"

using namespace mpoly;

TEST_CASE("from_edge_list builds the requested simple graph") {
    const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));

    const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("from_edge_list rejects bad input") {
    CHECK_THROWS_WITH(Graph::from_edge_list(2, {{0, 0}}),
                      Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(Graph::from_edge_list(2, {{0, 5}}),
                      Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS(Graph::from_edge_list(0, {}));
}

TEST_CASE("duplicate and reversed edges collapse") {
    const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("generators") {
    const Graph p4 = generate(GraphKind::path, 4);
    CHECK(p4.degree_sequence() == std::vector<int>{1, 2, 2, 1});

    const Graph s4 = generate(GraphKind::star, 4);
    CHECK(s4.degree_sequence() == std::vector<int>{3, 1, 1, 1});

    const Graph k4 = generate(GraphKind::complete, 4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    CHECK_THROWS(generate(GraphKind::cycle, 2));
    CHECK(generate(GraphKind::path, 1).edge_count() == 0);
}

TEST_CASE("complement") {
    const Graph p3 = path_graph(3);
    const Graph cp3 = p3.complement();
    CHECK(cp3.edge_count() == 1);
    CHECK(cp3.adjacent(0, 2));
    CHECK(cp3.degree(1) == 0);

    CHECK(complete_graph(4).complement().edge_count() == 0);
    CHECK(cycle_graph(5).complement().complement() == cycle_graph(5));
}

TEST_CASE("handshake and involution over the corpus") {
    for (const auto& [name, g] : corpus::factor_corpus()) {
        INFO(name);
        long long degsum = 0;
        for (int v = 0; v < g.order(); ++v) degsum += g.degree(v);
        CHECK(degsum == 2 * g.edge_count());
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("graph6 frozen vectors") {
    // Byte strings produced by an independent encoder.
    CHECK(emit_graph6(path_graph(3)) == "Bg");
    CHECK(emit_graph6(path_graph(4)) == "Ch");
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");

    const Graph p3 = parse_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
}

TEST_CASE("graph6 accepts the optional header and trailing newline") {
    CHECK(parse_graph6(">>graph6<<Bg\n") == path_graph(3));
}

TEST_CASE("graph6 errors carry a byte offset") {
    try {
        parse_graph6("D?");  // order 5 needs two data bytes, only one given
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("byte offset") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B\x01"), Graph6Error);  // byte outside alphabet
}

TEST_CASE("graph6 round-trips the whole corpus") {
    auto graphs = corpus::factor_corpus();
    for (const auto& g : corpus::isolated_corpus()) graphs.push_back(g);
    graphs.push_back({"K1x20", Graph::from_edge_list(20, {})});
    graphs.push_back({"G20", corpus::erdos_renyi(20, 7)});
    for (const auto& [name, g] : graphs) {
        INFO(name);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 three-byte order prefix") {
    const Graph g = corpus::erdos_renyi(70, 3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
}
