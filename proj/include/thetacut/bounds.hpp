#ifndef THETACUT_BOUNDS_HPP
#define THETACUT_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetacut/graph.hpp"
#include "thetacut/sdp.hpp"

namespace thetacut {

/// A solver-derived number together with whether every solve behind it certified.
struct Certified {
    double value = 0.0;
    bool certified = true;
};

/// (1/pi) m / (theta(complement) - 1). Throws std::invalid_argument for m = 0.
Certified surplus_lower_bound_theta(const Graph& g, const SolverConfig& cfg = {});

/// (1/pi) m / (chi_vec - 1). Throws std::invalid_argument for m = 0.
Certified surplus_lower_bound_vec(const Graph& g, const SolverConfig& cfg = {});

/// Delta + 1, an upper bound on theta of the complement.
double degree_bound_a(const Graph& g);

/// sqrt((1 + Delta)(1 + max_v theta(complement of G[N(v)]))); a null
/// neighbourhood contributes 0.
Certified degree_bound_b(const Graph& g, const SolverConfig& cfg = {});

struct Subadditivity {
    double lhs = 0.0;  // theta(complement of G)
    double rhs = 0.0;  // theta(complement of G[S]) + theta(complement of G[T])
    bool holds = true; // lhs <= rhs + 3e-4
    bool certified = true;
};

Subadditivity subadditivity_check(const Graph& g, const VertexSet& s, const SolverConfig& cfg = {});

struct DegreeDecomposition {
    std::vector<Vertex> low;   // degree <= d
    std::vector<Vertex> high;  // degree > d
    bool high_count_ok = true; // |high| <= 2m/d
    double bound = 0.0;        // (d + 1) + theta(complement of G[high])
    bool certified = true;
};

/// Throws std::invalid_argument unless d > 0.
DegreeDecomposition degree_threshold_decomposition(const Graph& g, double d, const SolverConfig& cfg = {});

struct TraceCube {
    double theta_cubed = 0.0;
    double trace_m3 = 0.0;
    /// x_u^T (sum_{v in N[u]} x_v x_v^T)^2 x_u for each u; these sum to trace_m3.
    std::vector<double> per_vertex_terms;
    bool holds = true;  // theta^3 <= tr(M^3) + 1e-3
};

/// `witness` must be a certified theta witness of complement(g). Throws
/// std::invalid_argument otherwise.
TraceCube trace_cube_check(const Graph& g, const GramWitness& witness);
TraceCube trace_cube_check(const Graph& g, const SolverConfig& cfg = {});

struct NeighborhoodOperator {
    double lambda_max = 0.0;  // largest eigenvalue of P = sum over N[u] of x_v x_v^T
    std::size_t classes = 0;  // greedy colour classes of G[N(u)]
    bool holds = true;        // lambda_max <= classes + 1 + 1e-4
};

/// `witness` is a theta witness of complement(g): non-adjacent pairs of g
/// carry orthogonal vectors. Throws std::invalid_argument if that fails by
/// more than 1e-6.
NeighborhoodOperator neighborhood_operator_bound(const Graph& g, Vertex u, const GramWitness& witness);

struct TransitiveChecks {
    std::optional<double> theta_g;
    std::optional<double> theta_bar;
    std::optional<double> product;        // theta(G) theta(complement), when vertex-transitive
    std::optional<double> formula;        // -n lambda_n / (lambda_1 - lambda_n), when edge-transitive
    bool product_ok = true;               // |product - n| <= 1e-3 n
    bool formula_ok = true;               // |theta(G) - formula| <= 1e-3
    bool certified = true;
};

/// Transitivity is asserted by the caller; nothing here inspects automorphisms.
TransitiveChecks transitive_closed_forms(const Graph& g, bool vertex_transitive, bool edge_transitive,
                                         const SolverConfig& cfg = {});

struct SpectralDiagnostic {
    std::optional<double> sp_exact;  // when n <= 30
    double minus_n_lambda_n = 0.0;
    std::optional<double> ratio;     // sp / (-n lambda_n)
};

SpectralDiagnostic spectral_surplus_diagnostic(const Graph& g);

struct SizeRecord {
    std::size_t size = 0;
    double max_theta_bar = 0.0;
};

struct Fit {
    double slope = 0.0;
    double residual = 0.0;  // root-mean-square residual of the log-log fit
    std::size_t points = 0;
};

struct FamilyEstimate {
    std::string forbidden;
    std::size_t samples = 0;
    std::vector<SizeRecord> by_vertices;  // running maximum over n (lambda is nondecreasing in n)
    std::vector<SizeRecord> by_edges;     // maximum per observed edge count
    Fit vertex_fit;
    Fit edge_fit;
    bool acyclic = false;
    std::size_t acyclic_bound_violations = 0;  // observations above |V(H)| - 1 + 1e-3
    bool all_certified = true;
};

/// Empirical lower estimates of lambda(n, H) and mu(m, H). Sample s at every
/// size uses seed derive_seed(seed, s) and edge probability spread over (0, 1).
/// `extra` graphs are added to the pool of their vertex count if H-free.
FamilyEstimate estimate_lambda_mu(const Graph& h, const std::string& h_name, const std::vector<std::size_t>& sizes,
                                  std::size_t samples_per_size, std::uint64_t seed, const SolverConfig& cfg = {},
                                  const std::vector<Graph>& extra = {});

bool is_forest(const Graph& g);

/// Least-squares slope of log y against log x.
Fit log_log_fit(const std::vector<SizeRecord>& records);

struct Check {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool passed = true;  // lhs <= rhs + tolerance
    bool certified = true;  // every solve feeding lhs and rhs certified; otherwise a failure is not a violation
};

struct ReportOptions {
    std::string id;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    std::size_t bipartitions = 50;
    std::uint64_t seed = 0;
    std::size_t max_exact_n = 30;
    std::size_t sandwich_max_n = 16;
    SolverConfig solver;
    /// Test hook: adds 1e-3 noise to the theta witness before validation.
    bool corrupt_witness = false;
};

struct BoundReport {
    std::string id;
    std::size_t n = 0;
    std::size_t m = 0;
    double theta_bar = 0.0;
    double chi_vec = 0.0;
    double strict_chi = 0.0;
    std::optional<double> sp_exact;
    std::optional<std::size_t> clique_number;
    std::optional<std::size_t> chromatic_number;
    /// Keys: surplus_theta, surplus_vec, edwards, degree_a, degree_b, subadditivity,
    /// trace_cube, transitive_product, edge_transitive_theta, spectral_sp_diag.
    std::map<std::string, std::optional<double>> bounds;
    std::vector<Check> checks;
    std::vector<std::string> violations;
    std::vector<std::string> uncertified;
};

/// Runs every applicable check; failures are recorded, never thrown.
BoundReport full_report(const Graph& g, const ReportOptions& options = {});

}  // namespace thetacut

#endif
