#ifndef THETACUT_GRAPH_IO_HPP
#define THETACUT_GRAPH_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list text: "n m" then m lines "u v" (0-based). Blank lines and
/// lines starting with '#' are ignored. Duplicate edges, self-loops,
/// out-of-range indices and a wrong edge count raise ParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// One graph6 record (optional ">>graph6<<" header, trailing newline allowed).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads either format from a file: graph6 if the first non-blank line is
/// not of the form "n m". Multiple graph6 lines yield multiple graphs.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace thetacut

#endif
