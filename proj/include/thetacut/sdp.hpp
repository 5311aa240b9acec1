#ifndef THETACUT_SDP_HPP
#define THETACUT_SDP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetacut/graph.hpp"
#include "thetacut/linalg.hpp"

namespace thetacut {

/// Witness tolerances shared by the solvers and validate_witness.
inline constexpr double kDiagonalTolerance = 1e-7;
inline constexpr double kConstraintTolerance = 1e-6;

struct SolverConfig {
    double tolerance = 1e-7;        // residual tolerance on the witness
    int max_iterations = 50000;
    double penalty = 1.0;           // initial ADMM penalty, rebalanced on the fly
    std::uint64_t seed = 0;         // sampling in validate_witness
    double gap_tolerance = 1e-5;    // certified once upper - lower <= gap_tolerance * max(1, value)
    int check_interval = 20;        // iterations between certificate evaluations
};

/// Which program a witness solves.
///  theta:  max <J,B>, tr B = 1, B_uv = 0 on edges, B PSD          (value = theta(G))
///  strict: min t, M_vv = 1, M_uv = t on edges, M PSD, kappa = 1-1/t (value = theta of complement)
///  vec:    min t, M_vv = 1, M_uv <= t on edges, M PSD               (value = vector chromatic number)
enum class SdpKind { theta, strict, vec };

std::string to_string(SdpKind kind);

struct GramWitness {
    SdpKind kind = SdpKind::theta;
    double value = 0.0;
    /// Unit-diagonal Gram matrix. For theta this is the eigenvalue form: its
    /// largest eigenvalue is at least `value` and entries on edges are zero.
    SymMatrix gram;
    std::vector<std::vector<double>> vectors;
    double primal_residual = 0.0;
    double psd_residual = 0.0;
    int iterations = 0;
    bool certified = false;
    /// Rigorous bracket on the optimum from the primal iterate and the dual multipliers.
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    /// theta only: the trace-one matrix B with <J,B> = value.
    std::optional<SymMatrix> primal;
    /// strict/vec only: common edge inner product -1/(kappa-1).
    double edge_value = 0.0;
};

/// Lovasz theta of `g`, for n >= 0 (theta of the null graph is reported as 0).
GramWitness solve_theta(const Graph& g, const SolverConfig& cfg = {});

/// Strict vector chromatic number (equals theta of the complement), floored at 2.
GramWitness solve_strict_vector_coloring(const Graph& g, const SolverConfig& cfg = {});

/// Vector chromatic number, floored at 2.
GramWitness solve_vector_coloring(const Graph& g, const SolverConfig& cfg = {});

/// Eigenvalue-form Gram matrix D^{-1/2} B D^{-1/2} from a theta primal B.
/// Vertices with zero diagonal get an isolated unit vector.
SymMatrix theta_gram_from_primal(const SymMatrix& b);

struct WitnessReport {
    double psd_residual = 0.0;         // max(0, -lambda_min(gram))
    double diagonal_residual = 0.0;    // max |gram_vv - 1|
    double constraint_residual = 0.0;  // max violation of the edge constraints
    std::optional<double> lambda_max;  // theta: largest eigenvalue of the eigenvalue-form Gram
    std::optional<double> sampled_max; // theta: max over sampled unit x of sum_v <x, x_v>^2
    bool ok = true;
    std::vector<std::string> problems;
};

/// Recomputes residuals from the witness alone; never throws for a
/// dimension-consistent witness.
WitnessReport validate_witness(const GramWitness& w, const Graph& g, SdpKind kind, const SolverConfig& cfg = {});

}  // namespace thetacut

#endif
