#ifndef THETACUT_CORPUS_HPP
#define THETACUT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

struct CorpusEntry {
    std::string id;
    Graph graph;
    bool vertex_transitive = false;
    bool edge_transitive = false;
};

/// Curated vertex- and edge-transitive graphs: C_3..C_9, K_3..K_8, K_{3,3},
/// Petersen, Kneser K(7,3).
std::vector<CorpusEntry> transitive_corpus();

/// K_2..K_8, C_3..C_9, Petersen, K_{3,3}, K_{4,4}, K(7,3), a star, a path,
/// and seeded random graphs on 4..12 vertices (at least one edge each),
/// 123 graphs in total.
std::vector<CorpusEntry> golden_corpus(std::uint64_t seed = 0);

inline constexpr std::size_t kGoldenRandomGraphs = 103;

}  // namespace thetacut

#endif
