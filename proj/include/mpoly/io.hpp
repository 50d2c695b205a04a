#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpoly/graph.hpp"
#include "mpoly/graph6.hpp"
#include "mpoly/products.hpp"

namespace mpoly {

enum class GraphFormat { edge_list, graph6 };

/// Edge-list text: first line is the order n, every following non-empty
/// line one edge "u v" with 0-indexed endpoints.
inline Graph read_edge_list(std::istream& in, const std::string& source = "<stream>") {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw std::runtime_error(source + ":" + std::to_string(lineno) +
                                         ": expected positive vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw std::runtime_error(source + ":" + std::to_string(lineno) +
                                     ": expected edge 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error(source + ": empty edge-list file");
    return Graph::from_edge_list(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    if (format == GraphFormat::edge_list) return read_edge_list(in, path);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw std::runtime_error(path + ": empty graph6 file");
    return parse_graph6(line);
}

/// Map file: one line per G-vertex, in index order, holding the image
/// H-vertex index.
inline SierpinskiMap read_sierpinski_map(const std::string& path, int n_g, int n_h) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file '" + path + "'");
    SierpinskiMap f;
    int v;
    while (in >> v) f.image.push_back(v);
    f.validate(n_g, n_h);
    return f;
}

}  // namespace mpoly
