#include "gat/formats.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "gat/errors.hpp"

namespace gat {

namespace {

constexpr int kG6Min = 63;   // '?'
constexpr int kG6Max = 126;  // '~'
constexpr int kG6MaxVertices = 62;

std::string strip_cr(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            long long count = 0;
            if (!(fields >> tag >> count) || tag != "n") {
                parse_fail(line_no, "expected header 'n <count>'");
            }
            std::string extra;
            if (fields >> extra) parse_fail(line_no, "trailing tokens after header");
            if (count <= 0) parse_fail(line_no, "vertex count must be positive");
            n = static_cast<int>(count);
            continue;
        }

        long long u = 0, v = 0;
        if (!(fields >> u >> v)) parse_fail(line_no, "expected edge 'u v'");
        std::string extra;
        if (fields >> extra) parse_fail(line_no, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            parse_fail(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
        }
        if (u == v) parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second) {
            parse_fail(line_no, "duplicate edge (" + std::to_string(e.first) + ", " +
                               std::to_string(e.second) + ")");
        }
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("missing 'n <count>' header");
    return Graph(n, std::move(edges));
}

Graph parse_graph6(const std::string& raw) {
    const std::string line = strip_cr(raw);
    if (line.empty()) throw ParseError("empty graph6 string");

    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126) {
        throw ParseError("graph6 long form (n > 62) is not supported");
    }
    if (size_byte < kG6Min || size_byte > kG6Max) {
        throw ParseError("graph6 byte out of range 63..126");
    }
    const int n = size_byte - kG6Min;
    if (n == 0) throw ParseError("graph6 null graph (n = 0) is not representable");

    const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t expected_bytes = (bits + 5) / 6;
    if (line.size() != 1 + expected_bytes) {
        throw ParseError("graph6 length mismatch: expected " +
                         std::to_string(1 + expected_bytes) + " bytes, got " +
                         std::to_string(line.size()));
    }

    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char byte = static_cast<unsigned char>(line[1 + bit / 6]);
            if (byte < kG6Min || byte > kG6Max) {
                throw ParseError("graph6 byte out of range 63..126");
            }
            const int group = byte - kG6Min;
            if (group & (1 << (5 - bit % 6))) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kG6MaxVertices) {
        throw std::invalid_argument("graph6 short form requires n <= 62, got n = " +
                                    std::to_string(n));
    }
    const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(kG6Min));
    out[0] = static_cast<char>(kG6Min + n);

    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.has_edge(u, v)) {
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
            }
        }
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    static const std::string kHeader = ">>graph6<<";
    std::vector<Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.rfind(kHeader, 0) == 0) line = line.substr(kHeader.size());
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            parse_fail(line_no, e.what());
        }
    }
    return graphs;
}

}  // namespace gat
