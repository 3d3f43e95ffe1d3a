#include "kout/graph_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kout/errors.hpp"

namespace kout {

namespace {

// Splits a line into exactly two unsigned integers separated by blanks.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
    auto skip_blanks = [&](std::size_t pos) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        return pos;
    };
    std::size_t pos = skip_blanks(0);
    auto r1 = std::from_chars(line.data() + pos, line.data() + line.size(), a);
    if (r1.ec != std::errc{} || r1.ptr == line.data() + pos) return false;
    pos = static_cast<std::size_t>(r1.ptr - line.data());
    const std::size_t after_first = pos;
    pos = skip_blanks(pos);
    if (pos == after_first) return false;
    auto r2 = std::from_chars(line.data() + pos, line.data() + line.size(), b);
    if (r2.ec != std::errc{} || r2.ptr == line.data() + pos) return false;
    pos = skip_blanks(static_cast<std::size_t>(r2.ptr - line.data()));
    return pos == line.size();
}

} // namespace

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(line_no, "missing header \"n m\"");
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    if (!parse_pair(line, n, m)) throw ParseError(line_no, "header must be \"n m\"");
    if (n > 0xffffffffULL) throw ParseError(line_no, "node count too large");
    if (n >= 1 && m > n * (n - 1) / 2) throw ParseError(line_no, "edge count exceeds n(n-1)/2");
    if (n == 0 && m != 0) throw ParseError(line_no, "edges declared on an empty vertex set");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::set<Edge> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        ++line_no;
        if (!std::getline(in, line)) throw ParseError(line_no, "expected " + std::to_string(m) + " edges");
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (!parse_pair(line, u, v)) throw ParseError(line_no, "edge line must be \"u v\"");
        if (u < 1 || v > n || u >= v) throw ParseError(line_no, "edge must satisfy 1 <= u < v <= n");
        const Edge e{static_cast<NodeId>(u), static_cast<NodeId>(v)};
        if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError(line_no, "unexpected content after the last edge");
        }
    }
    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

} // namespace kout
