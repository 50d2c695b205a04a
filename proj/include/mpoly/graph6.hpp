#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpoly/graph.hpp"

namespace mpoly {

/// Malformed graph6 input; offset is the byte position of the offending
/// character within the (header-stripped) string.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace g6 {

constexpr int kBias = 63;
constexpr int kMax = 126;

inline int data_byte(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6Error("truncated graph6 string", s.size());
    unsigned char ch = static_cast<unsigned char>(s[pos]);
    if (ch < kBias || ch > kMax)
        throw Graph6Error("byte outside graph6 alphabet", pos);
    return ch - kBias;
}

}  // namespace g6

/// Parse the standard graph6 encoding (bit-packed upper triangle, columns
/// in vertex order). The optional ">>graph6<<" prefix and a trailing
/// newline are accepted.
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);

    std::size_t pos = 0;
    long long n;
    int first = g6::data_byte(text, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
        // 126 126 + six bytes: orders up to 2^36-1
        n = 0;
        for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | g6::data_byte(text, k);
        pos = 8;
    } else {
        // 126 + three bytes: orders 63..258047
        n = 0;
        for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | g6::data_byte(text, k);
        pos = 4;
    }
    if (n < 1) throw Graph6Error("graph6 order must be at least 1", 0);
    if (n > 100000) throw Graph6Error("graph6 order too large for this tool", 0);

    const int nv = static_cast<int>(n);
    std::vector<std::pair<int, int>> edges;
    int bits_left = 0;
    int current = 0;
    for (int j = 1; j < nv; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = g6::data_byte(text, pos);
                ++pos;
                bits_left = 6;
            }
            if (current & (1 << (bits_left - 1))) edges.emplace_back(i, j);
            --bits_left;
        }
    }
    if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
        throw Graph6Error("nonzero padding bits", pos - 1);
    if (pos != text.size()) throw Graph6Error("trailing bytes after graph6 data", pos);
    return Graph::from_edge_list(nv, edges);
}

/// Inverse of parse_graph6; emits the shortest order prefix.
inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6::kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6::kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6::kBias));
        out.push_back(static_cast<char>((n & 63) + g6::kBias));
    } else {
        throw std::invalid_argument("graph too large for graph6 emitter");
    }
    int bits_used = 0;
    int current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits_used == 6) {
                out.push_back(static_cast<char>(current + g6::kBias));
                bits_used = 0;
                current = 0;
            }
        }
    }
    if (bits_used > 0)
        out.push_back(static_cast<char>((current << (6 - bits_used)) + g6::kBias));
    return out;
}

}  // namespace mpoly
