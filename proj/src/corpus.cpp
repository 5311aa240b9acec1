#include "thetacut/corpus.hpp"

#include "thetacut/generators.hpp"
#include "thetacut/random.hpp"

namespace thetacut {

namespace {

CorpusEntry transitive(std::string id, Graph g) { return {std::move(id), std::move(g), true, true}; }

}  // namespace

std::vector<CorpusEntry> transitive_corpus() {
    std::vector<CorpusEntry> out;
    for (std::size_t n = 3; n <= 9; ++n) out.push_back(transitive("C" + std::to_string(n), cycle_graph(n)));
    for (std::size_t n = 3; n <= 8; ++n) out.push_back(transitive("K" + std::to_string(n), complete_graph(n)));
    out.push_back(transitive("K3x3", complete_bipartite_graph(3, 3)));
    out.push_back(transitive("petersen", petersen_graph()));
    out.push_back(transitive("kneser:7,3", kneser_graph(7, 3)));
    return out;
}

std::vector<CorpusEntry> golden_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    for (std::size_t n = 2; n <= 8; ++n) out.push_back(transitive("K" + std::to_string(n), complete_graph(n)));
    for (std::size_t n = 3; n <= 9; ++n) out.push_back(transitive("C" + std::to_string(n), cycle_graph(n)));
    out.push_back(transitive("petersen", petersen_graph()));
    out.push_back(transitive("K3x3", complete_bipartite_graph(3, 3)));
    out.push_back(transitive("K4x4", complete_bipartite_graph(4, 4)));
    out.push_back(transitive("kneser:7,3", kneser_graph(7, 3)));
    out.push_back({"S5", star_graph(5)});
    out.push_back({"P6", path_graph(6)});

    std::uint64_t draw = 0;
    for (std::size_t i = 0; i < kGoldenRandomGraphs; ++i) {
        while (true) {
            Rng rng(derive_seed(seed, draw));
            const std::size_t n = 4 + uniform_below(rng, 9);
            const double p = 0.25 + 0.5 * uniform01(rng);
            const std::uint64_t graph_seed = rng();
            ++draw;
            Graph g = erdos_renyi_graph(n, p, graph_seed);
            if (g.edge_count() == 0) continue;
            out.push_back({"random" + std::to_string(i), std::move(g)});
            break;
        }
    }
    return out;
}

}  // namespace thetacut
