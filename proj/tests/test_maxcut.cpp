#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thetacut/generators.hpp"
#include "thetacut/graph_io.hpp"
#include "thetacut/maxcut.hpp"
#include "thetacut/random.hpp"
#include "thetacut/sdp.hpp"

using namespace thetacut;

namespace {

// plain enumeration of every subset, no symmetry tricks
std::size_t brute_maxcut(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t c = 0;
        for (auto [u, v] : g.edges()) c += ((mask >> u) & 1) != ((mask >> v) & 1);
        best = std::max(best, c);
    }
    return best;
}

VectorSet c5_optimal_vectors() {
    // consecutive vertices 4 pi / 5 apart on the unit circle
    VectorSet xs;
    for (int k = 0; k < 5; ++k) {
        const double a = 4 * std::numbers::pi * k / 5;
        xs.push_back({std::cos(a), std::sin(a)});
    }
    return xs;
}

VectorSet orthonormal(std::size_t n) {
    VectorSet xs(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) xs[i][i] = 1;
    return xs;
}

}  // namespace

TEST_CASE("exact maxcut examples") {
    const Cut k3 = exact_maxcut(complete_graph(3));
    CHECK(k3.cut_size == 2);
    CHECK(k3.surplus == doctest::Approx(0.5));
    CHECK(exact_maxcut(cycle_graph(5)).cut_size == 4);
    CHECK(exact_maxcut(cycle_graph(5)).surplus == doctest::Approx(1.5));
    CHECK(exact_maxcut(petersen_graph()).cut_size == 12);
    CHECK(exact_maxcut(petersen_graph()).surplus == doctest::Approx(4.5));
    CHECK(exact_maxcut(empty_graph(0)).cut_size == 0);
    CHECK_THROWS_AS(exact_maxcut(empty_graph(31)), SizeLimitError);
}

TEST_CASE("exact maxcut agrees with brute force") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng(derive_seed(17, s));
        const Graph g = erdos_renyi_graph(1 + uniform_below(rng, 11), uniform01(rng), s);
        CAPTURE(to_graph6(g));
        const Cut c = exact_maxcut(g);
        CHECK(c.cut_size == brute_maxcut(g));
        CHECK(cut_size(g, c.side) == c.cut_size);
        CHECK(c.surplus >= edwards_bound(g.edge_count()) - 1e-9);
        if (g.vertex_count() > 0) CHECK(c.side.test(0));
    }
}

TEST_CASE("edwards bound") {
    CHECK(edwards_bound(1) == doctest::Approx(0.25));
    CHECK(edwards_bound(3) == doctest::Approx(0.5));
    CHECK(edwards_bound(10) == doctest::Approx(1.0));
    CHECK(edwards_bound(0) == 0.0);
    for (std::size_t n : {3, 5, 7, 9, 11})
        CHECK(std::abs(exact_maxcut(complete_graph(n)).surplus - edwards_bound(n * (n - 1) / 2)) < 1e-9);
}

TEST_CASE("arcsin and linear bounds") {
    CHECK(arcsin_bound(complete_graph(4), orthonormal(4)) == doctest::Approx(0.0));
    const VectorSet anti = {{1.0}, {-1.0}};
    CHECK(arcsin_bound(complete_graph(2), anti) == doctest::Approx(0.5));
    CHECK(std::abs(arcsin_bound(cycle_graph(5), c5_optimal_vectors()) - 1.5) < 1e-12);

    CHECK(corollary_bound(complete_graph(4), orthonormal(4)) == doctest::Approx(0.0));
    CHECK(corollary_bound(complete_graph(2), anti) == doctest::Approx(1 / std::numbers::pi));
    CHECK(corollary_bound(cycle_graph(5), c5_optimal_vectors()) ==
          doctest::Approx(5 * (std::sqrt(5.0) + 1) / 4 / std::numbers::pi));

    CHECK_THROWS_AS(arcsin_bound(complete_graph(2), VectorSet{{1.0}, {0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_bound(complete_graph(2), VectorSet{{2.0}, {-1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_bound(complete_graph(2), VectorSet{{1.0}, {1.0}}), std::invalid_argument);
}

TEST_CASE("surplus dominates the arcsin bound of solver vectors") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Rng rng(derive_seed(23, s));
        const Graph g = erdos_renyi_graph(2 + uniform_below(rng, 10), 0.2 + 0.7 * uniform01(rng), s);
        if (g.edge_count() == 0) continue;
        CAPTURE(to_graph6(g));
        const auto w = solve_strict_vector_coloring(g);
        REQUIRE(w.certified);
        const double sp = exact_maxcut(g).surplus;
        const double arcsin = arcsin_bound(g, w.vectors);
        CHECK(sp >= arcsin - 1e-6);
        CHECK(corollary_bound(g, w.vectors) <= arcsin + 1e-9);
    }
}

TEST_CASE("hyperplane rounding") {
    const VectorSet anti = {{1.0, 0.0}, {-1.0, 0.0}};
    const auto k2 = gw_round(complete_graph(2), anti, 50, 1);
    CHECK(k2.best_cut.cut_size == 1);
    CHECK(k2.empirical_mean_cut == 1.0);

    const auto c5 = gw_round(cycle_graph(5), c5_optimal_vectors(), 10000, 0);
    CHECK(c5.closed_form_expected_cut == doctest::Approx(4.0));
    CHECK(std::abs(c5.empirical_mean_cut - 4.0) < 0.1);
    CHECK(c5.best_cut.cut_size == 4);

    const auto k4 = gw_round(complete_graph(4), orthonormal(4), 10000, 2);
    CHECK(k4.closed_form_expected_cut == doctest::Approx(3.0));
    CHECK(std::abs(k4.empirical_mean_cut - 3.0) < 4 * std::sqrt(36.0 / (4 * 10000)));
    CHECK(cut_size(complete_graph(4), k4.best_cut.side) == k4.best_cut.cut_size);

    CHECK_THROWS_AS(gw_round(complete_graph(2), anti, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gw_round(complete_graph(2), VectorSet{{1.0}, {0.0}}, 5, 0), std::invalid_argument);

    // same seed, same outcome
    const auto again = gw_round(cycle_graph(5), c5_optimal_vectors(), 10000, 0);
    CHECK(again.empirical_mean_cut == c5.empirical_mean_cut);
    CHECK(again.best_cut.side == c5.best_cut.side);
}

TEST_CASE("rounding mean tracks the closed form on random graphs") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = erdos_renyi_graph(9, 0.5, s);
        if (g.edge_count() == 0) continue;
        const auto w = solve_vector_coloring(g);
        const auto r = gw_round(g, w.vectors, 10000, s);
        const double m = double(g.edge_count());
        CHECK(std::abs(r.empirical_mean_cut - r.closed_form_expected_cut) < 4 * std::sqrt(m * m / (4 * 10000)));
        CHECK(r.best_cut.cut_size <= exact_maxcut(g).cut_size);
    }
}
