#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thetacut/combinatorics.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/graph.hpp"
#include "thetacut/graph_io.hpp"
#include "thetacut/random.hpp"

using namespace thetacut;

namespace {

// brute-force isomorphism test over all permutations, fine for n <= 8
bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> p(a.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(p[u], p[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// independent oracles: plain subset enumeration
std::size_t brute_clique(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
        if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

bool colorable(const Graph& g, std::size_t k, std::vector<std::size_t>& col, Vertex v) {
    if (v == g.vertex_count()) return true;
    for (std::size_t c = 0; c < k; ++c) {
        bool ok = true;
        for (Vertex u = 0; u < v; ++u)
            if (g.adjacent(u, v) && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (colorable(g, k, col, v + 1)) return true;
    }
    return false;
}

std::size_t brute_chromatic(const Graph& g) {
    std::vector<std::size_t> col(g.vertex_count());
    for (std::size_t k = 0;; ++k)
        if (colorable(g, k, col, 0)) return k;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(130);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.complement().count() == 127);
    CHECK(s.to_vector() == std::vector<std::size_t>{0, 64, 129});
    s.flip(64);
    CHECK_FALSE(s.test(64));
    CHECK(VertexSet::full(70).count() == 70);
}

TEST_CASE("graph construction and errors") {
    Graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
    CHECK(g.remove_edge(0, 1));
    CHECK(g.edge_count() == 0);
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 2}}).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("complement examples") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    const Graph pc = complement(petersen_graph());
    CHECK(pc.vertex_count() == 10);
    CHECK(pc.edge_count() == 30);
    for (Vertex v = 0; v < 10; ++v) CHECK(pc.degree(v) == 6);
}

TEST_CASE("induced subgraph examples") {
    const auto p = induced_subgraph(cycle_graph(5), std::vector<Vertex>{0, 1, 2});
    CHECK(p.graph == path_graph(3));
    CHECK(p.to_parent == std::vector<Vertex>{0, 1, 2});
    CHECK(induced_subgraph(cycle_graph(5), std::vector<Vertex>{}).graph.vertex_count() == 0);
    const Graph pet = petersen_graph();
    for (Vertex v = 0; v < 10; ++v) {
        const auto sub = induced_subgraph(pet, pet.neighbors(v));
        CHECK(sub.graph.vertex_count() == 3);
        CHECK(sub.graph.edge_count() == 0);
    }
    CHECK_THROWS_AS(induced_subgraph(pet, std::vector<Vertex>{0, 10}), std::out_of_range);
    CHECK_THROWS_AS(induced_subgraph(pet, std::vector<Vertex>{1, 1}), std::invalid_argument);
}

TEST_CASE("generators") {
    CHECK(generate(parse_family("cycle:5")).edge_count() == 5);
    const Graph k52 = generate(parse_family("kneser:5,2"));
    CHECK(k52.edge_count() == 15);
    CHECK(k52.max_degree() == 3);
    CHECK(isomorphic(k52, petersen_graph()) == true);
    CHECK(kneser_graph(7, 3).vertex_count() == 35);
    CHECK(kneser_graph(7, 3).edge_count() == 70);
    CHECK(star_graph(9).degree(0) == 9);
    CHECK(complete_bipartite_graph(3, 4).edge_count() == 12);
    CHECK_THROWS_AS(generate(parse_family("cycle:2")), std::invalid_argument);
    CHECK_THROWS_AS(kneser_graph(5, 3), std::invalid_argument);
    CHECK_THROWS(parse_family("nonsense:3"));
    CHECK_THROWS(parse_family("erdos_renyi:5,1.5"));

    GraphFamilySpec spec = parse_family("h_free_random:12,0.5,C3");
    spec.seed = 7;
    const Graph g = generate(spec);
    CHECK(g.vertex_count() == 12);
    CHECK_FALSE(contains_subgraph(g, cycle_graph(3)));
    CHECK(generate(spec) == g);  // pure in (spec, seed)
}

TEST_CASE("subgraph containment examples") {
    CHECK(contains_subgraph(cycle_graph(5), path_graph(3)));
    CHECK_FALSE(contains_subgraph(cycle_graph(5), cycle_graph(3)));
    CHECK(contains_subgraph(petersen_graph(), cycle_graph(5)));
    CHECK_FALSE(contains_subgraph(petersen_graph(), cycle_graph(4)));
    const auto map = find_subgraph(petersen_graph(), cycle_graph(5));
    REQUIRE(map);
    for (auto [u, v] : cycle_graph(5).edges()) CHECK(petersen_graph().adjacent((*map)[u], (*map)[v]));
}

TEST_CASE("chromatic and clique examples") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(empty_graph(0)) == 0);
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(complement(cycle_graph(7))) == 3);
    CHECK_THROWS_AS(chromatic_number(empty_graph(21)), SizeLimitError);
    CHECK_THROWS_AS(clique_number(empty_graph(31)), SizeLimitError);
}

TEST_CASE("graph properties on random graphs") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng(derive_seed(99, s));
        const std::size_t n = 1 + uniform_below(rng, 9);
        const Graph g = erdos_renyi_graph(n, uniform01(rng), s);
        CAPTURE(to_graph6(g));
        CHECK(complement(complement(g)) == g);

        VertexSet side(n);
        for (Vertex v = 0; v < n; ++v)
            if (uniform01(rng) < 0.5) side.set(v);
        const auto a = induced_subgraph(g, side);
        const auto b = induced_subgraph(g, side.complement());
        CHECK(a.graph.edge_count() + b.graph.edge_count() + cut_size(g, side) == g.edge_count());

        const std::size_t chi = chromatic_number(g), omega = clique_number(g);
        CHECK(chi == brute_chromatic(g));
        CHECK(omega == brute_clique(g));
        CHECK(chi >= omega);
        CHECK(chi <= g.max_degree() + 1);
        CHECK(is_bipartite(g) == (chi <= 2));

        std::size_t classes = 0;
        const auto col = greedy_coloring(g, &classes);
        for (auto [u, v] : g.edges()) CHECK(col[u] != col[v]);
        CHECK(classes >= chi);
    }
}

TEST_CASE("h-free random output avoids the pattern") {
    const Graph patterns[] = {cycle_graph(3), cycle_graph(4), path_graph(3), path_graph(4), star_graph(3)};
    for (const Graph& h : patterns)
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Graph g = h_free_random_graph(10, 0.6, h, s);
            CHECK_FALSE(contains_subgraph(g, h));
        }
}

TEST_CASE("edge list format") {
    const Graph c5 = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(c5 == cycle_graph(5));
    CHECK(parse_edge_list(to_edge_list(petersen_graph())) == petersen_graph());
    CHECK(parse_edge_list("# comment\n3 0\n\n").vertex_count() == 3);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
}

TEST_CASE("graph6 format") {
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");  // matches the usual nauty output
    CHECK(parse_graph6("IheA@GUAo") == petersen_graph());
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
    CHECK(to_graph6(empty_graph(0)) == "?");
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Graph g = erdos_renyi_graph(5 + s * 4, 0.3, s);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
}
