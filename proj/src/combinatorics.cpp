#include "thetacut/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

namespace thetacut {

namespace {

// Pattern vertices ordered so each one (after the first in its component)
// has an already-placed neighbour, preferring high degree.
std::vector<Vertex> pattern_order(const Graph& h) {
    const std::size_t k = h.vertex_count();
    std::vector<Vertex> order;
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> links(k, 0);
    while (order.size() < k) {
        Vertex best = k;
        for (Vertex v = 0; v < k; ++v) {
            if (placed[v]) continue;
            if (best == k || links[v] > links[best] ||
                (links[v] == links[best] && h.degree(v) > h.degree(best)))
                best = v;
        }
        placed[best] = true;
        order.push_back(best);
        h.neighbors(best).for_each([&](Vertex w) { ++links[w]; });
    }
    return order;
}

struct SubgraphSearch {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> order;
    std::vector<Vertex> image;  // indexed by pattern vertex
    VertexSet used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const Vertex p = order[depth];
        VertexSet candidates = VertexSet::full(g.vertex_count());
        candidates.subtract(used);
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex q = order[i];
            if (h.adjacent(p, q)) candidates &= g.neighbors(image[q]);
        }
        const std::size_t need = h.degree(p);
        bool found = false;
        candidates.for_each([&](Vertex c) {
            if (found || g.degree(c) < need) return;
            image[p] = c;
            used.set(c);
            if (extend(depth + 1)) {
                found = true;
                return;
            }
            used.reset(c);
        });
        return found;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& h) {
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
    SubgraphSearch search{g, h, pattern_order(h), std::vector<Vertex>(h.vertex_count(), 0),
                          VertexSet(g.vertex_count())};
    if (!search.extend(0)) return std::nullopt;
    return search.image;
}

std::vector<std::size_t> greedy_coloring(const Graph& g, std::size_t* classes) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> colour(n, 0);
    std::size_t k = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<bool> taken(k + 1, false);
        g.neighbors(v).for_each([&](Vertex u) {
            if (u < v) taken[colour[u]] = true;
        });
        std::size_t c = 0;
        while (taken[c]) ++c;
        colour[v] = c;
        k = std::max(k, c + 1);
    }
    if (classes != nullptr) *classes = k;
    return colour;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> small_rows(const Graph& g) {
    std::vector<Mask> rows(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) rows[v] = g.neighbors(v).words().empty() ? 0 : g.neighbors(v).words()[0];
    return rows;
}

// Branch and bound over candidate sets with a greedy colouring bound.
struct CliqueSearch {
    const std::vector<Mask>& rows;
    std::size_t best = 0;

    void expand(Mask candidates, std::size_t size) {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        // Colour classes give an upper bound on the clique inside `candidates`.
        std::vector<int> order;
        std::vector<std::size_t> bound;
        Mask uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured != 0) {
            ++colour;
            Mask avail = uncoloured;
            while (avail != 0) {
                const int v = std::countr_zero(avail);
                avail &= ~(Mask{1} << v) & ~rows[v];
                uncoloured &= ~(Mask{1} << v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best) return;
            const int v = order[i];
            expand(candidates & rows[v], size + 1);
            candidates &= ~(Mask{1} << v);
        }
    }
};

bool colourable(const std::vector<Mask>& rows, std::vector<int>& colour, std::size_t k, std::size_t coloured) {
    const std::size_t n = rows.size();
    if (coloured == n) return true;
    // DSATUR choice: most distinct neighbour colours, then highest degree.
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (colour[v] >= 0) continue;
        std::uint32_t seen = 0;
        for (std::size_t u = 0; u < n; ++u)
            if (((rows[v] >> u) & 1U) && colour[u] >= 0) seen |= 1U << colour[u];
        const int sat = std::popcount(seen);
        const int deg = std::popcount(rows[v]);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = static_cast<int>(v);
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    std::uint32_t forbidden = 0;
    for (std::size_t u = 0; u < n; ++u)
        if (((rows[pick] >> u) & 1U) && colour[u] >= 0) forbidden |= 1U << colour[u];
    // Symmetry: never open more than one new colour class.
    int used = 0;
    for (std::size_t u = 0; u < n; ++u) used = std::max(used, colour[u] + 1);
    for (int c = 0; c < static_cast<int>(k) && c <= used; ++c) {
        if ((forbidden >> c) & 1U) continue;
        colour[pick] = c;
        if (colourable(rows, colour, k, coloured + 1)) return true;
        colour[pick] = -1;
    }
    return false;
}

}  // namespace

std::size_t clique_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kCliqueMaxVertices)
        throw SizeLimitError("clique_number supports at most " + std::to_string(kCliqueMaxVertices) +
                             " vertices, got " + std::to_string(n));
    if (n == 0) return 0;
    const auto rows = small_rows(g);
    CliqueSearch search{rows};
    search.expand(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, 0);
    return search.best;
}

std::size_t chromatic_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kChromaticMaxVertices)
        throw SizeLimitError("chromatic_number supports at most " + std::to_string(kChromaticMaxVertices) +
                             " vertices, got " + std::to_string(n));
    if (n == 0) return 0;
    std::size_t upper = 0;
    greedy_coloring(g, &upper);
    const auto rows = small_rows(g);
    std::size_t k = clique_number(g);
    for (; k < upper; ++k) {
        std::vector<int> colour(n, -1);
        if (colourable(rows, colour, k, 0)) return k;
    }
    return upper;
}

}  // namespace thetacut
