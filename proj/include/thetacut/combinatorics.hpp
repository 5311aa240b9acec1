#ifndef THETACUT_COMBINATORICS_HPP
#define THETACUT_COMBINATORICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

inline constexpr std::size_t kChromaticMaxVertices = 20;
inline constexpr std::size_t kCliqueMaxVertices = 30;

/// Injective map from V(H) into V(G) carrying every edge of H onto an edge
/// of G (not necessarily induced), or nullopt if none exists.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& h);

inline bool contains_subgraph(const Graph& g, const Graph& h) { return find_subgraph(g, h).has_value(); }

/// Exact chromatic number. Throws SizeLimitError above kChromaticMaxVertices.
std::size_t chromatic_number(const Graph& g);

/// Exact clique number. Throws SizeLimitError above kCliqueMaxVertices.
std::size_t clique_number(const Graph& g);

/// Greedy colouring in vertex order; colour[v] in 0..k-1 with k returned as
/// the number of classes.
std::vector<std::size_t> greedy_coloring(const Graph& g, std::size_t* classes = nullptr);

}  // namespace thetacut

#endif
