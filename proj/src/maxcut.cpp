#include "thetacut/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "thetacut/linalg.hpp"
#include "thetacut/random.hpp"

namespace thetacut {

Cut make_cut(const Graph& g, VertexSet side) {
    Cut c;
    c.cut_size = cut_size(g, side);
    c.surplus = static_cast<double>(c.cut_size) - static_cast<double>(g.edge_count()) / 2.0;
    c.side = std::move(side);
    return c;
}

Cut exact_maxcut(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kExactMaxCutMaxVertices)
        throw SizeLimitError("exact_maxcut supports at most " + std::to_string(kExactMaxCutMaxVertices) +
                             " vertices, got " + std::to_string(n));
    if (n == 0) return make_cut(g, VertexSet(0));

    std::vector<std::uint64_t> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbors(v).words()[0];

    // Gray code over vertices 1..n-1; vertex 0 stays in A (bit set).
    std::uint64_t mask = 1;  // everything except vertex 0 starts in B
    long long cut = static_cast<long long>(g.degree(0));
    long long best = cut;
    std::uint64_t best_mask = mask;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = std::countr_zero(k) + 1;
        const std::uint64_t bit = std::uint64_t{1} << v;
        const bool in_a = (mask & bit) != 0;
        const long long same = std::popcount(rows[v] & (in_a ? mask : ~mask & ((std::uint64_t{1} << n) - 1)));
        const long long deg = std::popcount(rows[v]);
        // Moving v: edges to its old side become cut, edges to the other side stop being cut.
        cut += same - (deg - same);
        mask ^= bit;
        if (cut > best || (cut == best && mask < best_mask)) {
            best = cut;
            best_mask = mask;
        }
    }
    VertexSet side(n);
    for (Vertex v = 0; v < n; ++v)
        if ((best_mask >> v) & 1U) side.set(v);
    return make_cut(g, std::move(side));
}

double edwards_bound(std::size_t m) { return (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 8.0; }

namespace {

void check_vectors(const Graph& g, const VectorSet& vectors) {
    if (vectors.size() != g.vertex_count())
        throw std::invalid_argument("need one vector per vertex");
}

double clamped_cosine(const std::vector<double>& a, const std::vector<double>& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("zero vector supplied");
    return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

}  // namespace

double arcsin_bound(const Graph& g, const VectorSet& vectors) {
    check_vectors(g, vectors);
    for (const auto& x : vectors)
        if (norm(x) == 0.0) throw std::invalid_argument("zero vector supplied");
    double total = 0.0;
    for (const auto& [u, v] : g.edges()) total += std::asin(clamped_cosine(vectors[u], vectors[v]));
    return -total / std::numbers::pi;
}

double corollary_bound(const Graph& g, const VectorSet& vectors) {
    check_vectors(g, vectors);
    for (const auto& x : vectors)
        if (std::abs(norm(x) - 1.0) > 1e-6) throw std::invalid_argument("corollary bound needs unit vectors");
    double total = 0.0;
    for (const auto& [u, v] : g.edges()) {
        const double ip = dot(vectors[u], vectors[v]);
        if (ip > 1e-9)
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " has a positive inner product");
        total += ip;
    }
    return -total / std::numbers::pi;
}

RoundingOutcome gw_round(const Graph& g, const VectorSet& vectors, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    check_vectors(g, vectors);
    const std::size_t n = g.vertex_count();
    std::size_t dim = 0;
    for (const auto& x : vectors) {
        if (norm(x) == 0.0) throw std::invalid_argument("zero vector supplied");
        dim = std::max(dim, x.size());
    }

    RoundingOutcome out;
    out.trials = trials;
    out.arcsin_bound = arcsin_bound(g, vectors);
    for (const auto& [u, v] : g.edges())
        out.closed_form_expected_cut += std::acos(clamped_cosine(vectors[u], vectors[v])) / std::numbers::pi;

    std::vector<double> z(dim);
    double total = 0.0;
    bool have_best = false;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, trial));
        double nz = 0.0;
        for (double& c : z) {
            c = standard_normal(rng);
            nz += c * c;
        }
        nz = std::sqrt(nz);
        for (double& c : z) c /= nz;
        VertexSet side(n);
        for (Vertex v = 0; v < n; ++v)
            if (dot(vectors[v], z) >= 0.0) side.set(v);
        Cut cut = make_cut(g, std::move(side));
        total += static_cast<double>(cut.cut_size);
        if (!have_best || cut.cut_size > out.best_cut.cut_size) {
            out.best_cut = std::move(cut);
            have_best = true;
        }
    }
    out.empirical_mean_cut = total / static_cast<double>(trials);
    return out;
}

}  // namespace thetacut
