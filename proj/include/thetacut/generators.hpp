#ifndef THETACUT_GENERATORS_HPP
#define THETACUT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

enum class Family {
    empty,
    path,
    star,
    cycle,
    complete,
    complete_bipartite,
    petersen,
    kneser,
    erdos_renyi,
    h_free_random,
};

/// Parameters naming one graph of a family. Same spec and seed, same graph.
struct GraphFamilySpec {
    Family family = Family::empty;
    std::vector<std::size_t> sizes;  // n; or (a, b); or (n, k)
    double probability = 0.0;
    std::shared_ptr<const Graph> forbidden;  // h_free_random only
    std::string forbidden_name;
    std::uint64_t seed = 0;
};

Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Star with `leaves` leaves; the centre is vertex 0.
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
/// Kneser graph K(n, k): k-subsets of {0..n-1} (lexicographic), adjacent iff disjoint.
Graph kneser_graph(std::size_t n, std::size_t k);
Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed);
/// G(n, p) followed by deleting one random edge of each copy of `forbidden`
/// found, until none remains.
Graph h_free_random_graph(std::size_t n, double p, const Graph& forbidden, std::uint64_t seed);

/// Throws std::invalid_argument on an invalid parameter combination.
Graph generate(const GraphFamilySpec& spec);

/// Parses "name[:a,b,...]" (e.g. "cycle:5", "kneser:7,3", "erdos_renyi:12,0.5",
/// "h_free_random:12,0.5,C3") or a short pattern token: C<r>, P<k>, K<k>,
/// S<k> (star with k leaves), K<a>x<b>.
GraphFamilySpec parse_family(std::string_view text);
std::string to_string(const GraphFamilySpec& spec);

}  // namespace thetacut

#endif
