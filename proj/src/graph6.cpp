#include "fracmatch/graph6.hpp"

#include <cstddef>

namespace fracmatch {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxParseN = 2000;

int sextet(std::string_view s, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long n;
    if (sextet(line, 0) == 63) {
        // three-byte size form: 126 then 18 bits
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("eight-byte size form not supported", 1);
        if (line.size() < 4) throw ParseError("truncated size field", line.size());
        n = (long(sextet(line, 1)) << 12) | (long(sextet(line, 2)) << 6) | sextet(line, 3);
        if (n > kMaxParseN)
            throw UnsupportedSizeError("graph6 size " + std::to_string(n) + " above limit " +
                                       std::to_string(kMaxParseN));
        pos = 4;
    } else {
        n = sextet(line, 0);
        pos = 1;
    }

    const long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < need) throw ParseError("truncated adjacency bits", line.size());
    if (line.size() - pos > need) throw ParseError("trailing garbage after adjacency bits", pos + need);

    Graph g(static_cast<int>(n));
    long b = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            if (b % 6 == 0) cur = sextet(line, pos + static_cast<std::size_t>(b / 6));
            if ((cur >> (5 - b % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw UnsupportedSizeError("encode_graph6 supports at most 62 vertices, got " +
                                   std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace fracmatch
