#include "thetacut/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace thetacut {

namespace {

bool skippable(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    long long m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) fail(line_no, "expected header 'n m'");
        break;
    }
    if (n < 0) throw ParseError("empty input: missing 'n m' header");
    Graph g(static_cast<std::size_t>(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        std::istringstream row(line);
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) fail(line_no, "expected edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex index out of range");
        if (u == v) fail(line_no, "self-loop");
        if (++seen > m) fail(line_no, "more edges than declared m=" + std::to_string(m));
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail(line_no, "duplicate edge");
    }
    if (seen != m)
        throw ParseError("declared m=" + std::to_string(m) + " but read " + std::to_string(seen) + " edges");
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::size_t pos = 0;
    const auto next = [&]() -> unsigned {
        if (pos >= text.size()) throw ParseError("graph6: truncated input");
        const auto c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
        return c - 63U;
    };
    std::size_t n = next();
    if (n == 63) {
        std::size_t groups = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            groups = 6;
        }
        n = 0;
        for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | next();
    }
    Graph g(n);
    unsigned word = 0;
    int left = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            if (left == 0) {
                word = next();
                left = 6;
            }
            --left;
            if ((word >> left) & 1U) g.add_edge(u, v);
        }
    if (pos != text.size()) throw ParseError("graph6: trailing data");
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const std::size_t n = g.vertex_count();
    const auto put = [&](unsigned six) { out.push_back(static_cast<char>(six + 63)); };
    if (n <= 62) {
        put(static_cast<unsigned>(n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) put(static_cast<unsigned>((n >> s) & 63U));
    } else {
        out.append(2, static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) put(static_cast<unsigned>((n >> s) & 63U));
    }
    unsigned word = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(u, v) ? 1U : 0U);
            if (++filled == 6) {
                put(word);
                word = 0;
                filled = 0;
            }
        }
    if (filled > 0) put(word << (6 - filled));
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && skippable(line)) {}
    std::istringstream probe(line);
    long long a = 0;
    long long b = 0;
    if (probe >> a >> b) return {parse_edge_list(text)};

    std::vector<Graph> graphs;
    std::istringstream all(text);
    while (std::getline(all, line)) {
        if (skippable(line)) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

}  // namespace thetacut
