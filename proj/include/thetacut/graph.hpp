#ifndef THETACUT_GRAPH_HPP
#define THETACUT_GRAPH_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetacut/vertex_set.hpp"

namespace thetacut {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an exact routine is asked to run past its size cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Rows are kept symmetric and irreflexive by every mutator, and the edge
/// count is cached so `edge_count()` is O(1).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(check(v)); }
    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    std::size_t degree(Vertex v) const { return rows_.at(v).count(); }
    std::size_t max_degree() const noexcept;

    /// Adds uv; returns false if it was already present. Self-loops and
    /// out-of-range endpoints throw.
    bool add_edge(Vertex u, Vertex v);
    /// Removes uv; returns false if it was absent.
    bool remove_edge(Vertex u, Vertex v);

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_complete() const noexcept { return m_ == max_edges(); }
    std::size_t max_edges() const noexcept { return rows_.size() * (rows_.empty() ? 0 : rows_.size() - 1) / 2; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Vertex check(Vertex v) const {
        if (v >= rows_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(rows_.size()));
        return v;
    }

    std::vector<VertexSet> rows_;
    std::size_t m_ = 0;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph relabelled to i.
    std::vector<Vertex> to_parent;
};

/// Subgraph induced by `vertices`; new labels follow ascending parent order.
/// Throws std::out_of_range for indices >= n and std::invalid_argument for
/// repeated indices.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Number of edges with exactly one endpoint in `side`.
std::size_t cut_size(const Graph& g, const VertexSet& side);

/// True iff the graph admits a proper 2-colouring.
bool is_bipartite(const Graph& g);

}  // namespace thetacut

#endif
