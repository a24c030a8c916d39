#pragma once

#include <istream>
#include <string>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

// Short-form graph6 (n <= 62): one byte 63+n, then the upper triangle of the
// adjacency matrix read column by column ((0,1),(0,2),(1,2),(0,3),...),
// packed 6 bits per byte, MSB first, each byte offset by 63.

inline Graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) pos = header.size();
    if (pos >= line.size()) throw parse_error("graph6: empty line");

    const unsigned char first = line[pos];
    if (first == 126) throw parse_error("graph6: long form (n > 62) not supported");
    if (first < 63 || first > 125) throw parse_error("graph6: bad order byte");
    const int n = first - 63;
    ++pos;

    Graph g(n);
    const int bits_needed = n * (n - 1) / 2;
    int bit = 0;
    int buffer = 0, buffered = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (buffered == 0) {
                if (pos >= line.size()) throw parse_error("graph6: truncated bit payload");
                const unsigned char c = line[pos++];
                if (c < 63 || c > 126) throw parse_error("graph6: bad payload byte");
                buffer = c - 63;
                buffered = 6;
            }
            if ((buffer >> (buffered - 1)) & 1) g.add_edge(row, col);
            --buffered;
            ++bit;
        }
    }
    (void)bits_needed;
    if (pos != line.size()) throw parse_error("graph6: trailing characters");
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw capacity_error("graph6: short form limited to n <= 62");
    std::string out;
    out.push_back(char(63 + n));
    int buffer = 0, buffered = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            buffer = (buffer << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(char(63 + buffer));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0) out.push_back(char(63 + (buffer << (6 - buffered))));
    return out;
}

/// Reads one graph per line; blank lines are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace gpos
