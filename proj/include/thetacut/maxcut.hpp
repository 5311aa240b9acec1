#ifndef THETACUT_MAXCUT_HPP
#define THETACUT_MAXCUT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

inline constexpr std::size_t kExactMaxCutMaxVertices = 30;

/// A bipartition (A, B); side.test(v) means v is in A.
struct Cut {
    VertexSet side;
    std::size_t cut_size = 0;
    double surplus = 0.0;  // cut_size - m/2
};

Cut make_cut(const Graph& g, VertexSet side);

/// Optimal cut by Gray-code enumeration with vertex 0 fixed in A. Among
/// optima the numerically smallest side mask is returned.
Cut exact_maxcut(const Graph& g);

/// (sqrt(8m + 1) - 1) / 8.
double edwards_bound(std::size_t m);

using VectorSet = std::vector<std::vector<double>>;

/// -(1/pi) sum over edges of arcsin(<x_u,x_v> / (|x_u||x_v|)), cosines
/// clamped to [-1, 1]. Throws std::invalid_argument on a zero vector.
double arcsin_bound(const Graph& g, const VectorSet& vectors);

/// -(1/pi) sum over edges of <x_u,x_v> for unit vectors with non-positive
/// edge inner products (tolerance 1e-9); throws std::invalid_argument otherwise.
double corollary_bound(const Graph& g, const VectorSet& vectors);

struct RoundingOutcome {
    Cut best_cut;
    std::size_t trials = 0;
    double empirical_mean_cut = 0.0;
    double closed_form_expected_cut = 0.0;  // sum over edges of angle / pi
    double arcsin_bound = 0.0;
};

/// Random-hyperplane rounding: z has normalised Gaussian coordinates and
/// A = {v : <x_v, z> >= 0}. Trial i draws from a stream derived from
/// (seed, i), so results do not depend on evaluation order.
RoundingOutcome gw_round(const Graph& g, const VectorSet& vectors, std::size_t trials, std::uint64_t seed);

}  // namespace thetacut

#endif
