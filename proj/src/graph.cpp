#include "thetacut/graph.hpp"

#include <algorithm>
#include <queue>

namespace thetacut {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& row : rows_) d = std::max(d, row.count());
    return d;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v || !rows_[u].test(v)) return false;
    rows_[u].reset(v);
    rows_[v].reset(u);
    --m_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < rows_.size(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    Graph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    const std::size_t n = g.vertex_count();
    VertexSet members(n);
    for (Vertex v : vertices) {
        if (v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n));
        if (members.test(v)) throw std::invalid_argument("repeated vertex " + std::to_string(v));
        members.set(v);
    }
    return induced_subgraph(g, members);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    if (vertices.capacity() != g.vertex_count())
        throw std::invalid_argument("vertex set capacity does not match graph order");
    InducedSubgraph out;
    out.to_parent = vertices.to_vector();
    const std::size_t k = out.to_parent.size();
    std::vector<Vertex> to_child(g.vertex_count(), k);
    for (Vertex i = 0; i < k; ++i) to_child[out.to_parent[i]] = i;
    out.graph = Graph(k);
    for (Vertex i = 0; i < k; ++i)
        (g.neighbors(out.to_parent[i]) & vertices).for_each([&](Vertex p) {
            const Vertex j = to_child[p];
            if (i < j) out.graph.add_edge(i, j);
        });
    return out;
}

std::size_t cut_size(const Graph& g, const VertexSet& side) {
    std::size_t cut = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (side.test(u)) cut += g.degree(u) - g.neighbors(u).intersection_count(side);
    return cut;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            bool ok = true;
            g.neighbors(u).for_each([&](Vertex v) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace thetacut
