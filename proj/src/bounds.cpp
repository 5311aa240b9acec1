#include "thetacut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thetacut/combinatorics.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/graph_io.hpp"
#include "thetacut/maxcut.hpp"
#include "thetacut/random.hpp"

namespace thetacut {

namespace {

// theta of the complement, memoised by labelled graph within one computation.
class ComplementTheta {
public:
    explicit ComplementTheta(const SolverConfig& cfg) : cfg_(cfg) {}

    Certified operator()(const Graph& g) {
        if (g.vertex_count() == 0) return {0.0, true};
        const std::string key = to_graph6(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const GramWitness w = solve_theta(complement(g), cfg_);
        return memo_.emplace(key, Certified{w.value, w.certified}).first->second;
    }

private:
    const SolverConfig& cfg_;
    std::map<std::string, Certified> memo_;
};

Certified degree_bound_b_with(const Graph& g, ComplementTheta& theta_bar) {
    Certified worst{0.0, true};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Certified t = theta_bar(induced_subgraph(g, g.neighbors(v)).graph);
        worst.value = std::max(worst.value, t.value);
        worst.certified = worst.certified && t.certified;
    }
    const double delta = static_cast<double>(g.max_degree());
    return {std::sqrt((1.0 + delta) * (1.0 + worst.value)), worst.certified};
}

Subadditivity subadditivity_with(const Graph& g, const VertexSet& s, Certified lhs, ComplementTheta& theta_bar) {
    if (s.capacity() != g.vertex_count()) throw std::invalid_argument("vertex set does not match the graph");
    const Certified a = theta_bar(induced_subgraph(g, s).graph);
    const Certified b = theta_bar(induced_subgraph(g, s.complement()).graph);
    Subadditivity out;
    out.lhs = lhs.value;
    out.rhs = a.value + b.value;
    out.holds = out.lhs <= out.rhs + 3e-4;
    out.certified = lhs.certified && a.certified && b.certified;
    return out;
}

DegreeDecomposition decomposition_with(const Graph& g, double d, ComplementTheta& theta_bar) {
    if (!(d > 0.0)) throw std::invalid_argument("degree threshold must be positive");
    DegreeDecomposition out;
    VertexSet high(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<double>(g.degree(v)) <= d) {
            out.low.push_back(v);
        } else {
            out.high.push_back(v);
            high.set(v);
        }
    }
    out.high_count_ok = static_cast<double>(out.high.size()) <= 2.0 * static_cast<double>(g.edge_count()) / d + 1e-9;
    const Certified t = theta_bar(induced_subgraph(g, high).graph);
    out.bound = d + 1.0 + t.value;
    out.certified = t.certified;
    return out;
}

}  // namespace

Certified surplus_lower_bound_theta(const Graph& g, const SolverConfig& cfg) {
    if (g.edge_count() == 0) throw std::invalid_argument("surplus bound needs at least one edge");
    const GramWitness w = solve_theta(complement(g), cfg);
    if (w.value <= 1.0 + 1e-6) throw std::domain_error("theta of the complement is at most 1");
    return {static_cast<double>(g.edge_count()) / (std::numbers::pi * (w.value - 1.0)), w.certified};
}

Certified surplus_lower_bound_vec(const Graph& g, const SolverConfig& cfg) {
    if (g.edge_count() == 0) throw std::invalid_argument("surplus bound needs at least one edge");
    const GramWitness w = solve_vector_coloring(g, cfg);
    return {static_cast<double>(g.edge_count()) / (std::numbers::pi * (w.value - 1.0)), w.certified};
}

double degree_bound_a(const Graph& g) { return static_cast<double>(g.max_degree()) + 1.0; }

Certified degree_bound_b(const Graph& g, const SolverConfig& cfg) {
    ComplementTheta theta_bar(cfg);
    return degree_bound_b_with(g, theta_bar);
}

Subadditivity subadditivity_check(const Graph& g, const VertexSet& s, const SolverConfig& cfg) {
    ComplementTheta theta_bar(cfg);
    return subadditivity_with(g, s, theta_bar(g), theta_bar);
}

DegreeDecomposition degree_threshold_decomposition(const Graph& g, double d, const SolverConfig& cfg) {
    ComplementTheta theta_bar(cfg);
    return decomposition_with(g, d, theta_bar);
}

TraceCube trace_cube_check(const Graph& g, const GramWitness& witness) {
    const std::size_t n = g.vertex_count();
    if (witness.kind != SdpKind::theta || witness.gram.dim() != n)
        throw std::invalid_argument("trace check needs a theta witness of the complement");
    if (!witness.certified) throw std::invalid_argument("trace check needs a certified witness");
    const SymMatrix& m = witness.gram;
    TraceCube out;
    out.theta_cubed = witness.value * witness.value * witness.value;
    out.trace_m3 = trace_cube(m);
    out.per_vertex_terms.resize(n);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> closed = g.neighbors(u).to_vector();
        closed.push_back(u);
        double term = 0.0;
        for (Vertex v : closed)
            for (Vertex w : closed) term += m(u, v) * m(v, w) * m(w, u);
        out.per_vertex_terms[u] = term;
    }
    out.holds = out.theta_cubed <= out.trace_m3 + 1e-3;
    return out;
}

TraceCube trace_cube_check(const Graph& g, const SolverConfig& cfg) {
    return trace_cube_check(g, solve_theta(complement(g), cfg));
}

NeighborhoodOperator neighborhood_operator_bound(const Graph& g, Vertex u, const GramWitness& witness) {
    if (witness.gram.dim() != g.vertex_count()) throw std::invalid_argument("witness does not match the graph");
    std::vector<Vertex> closed = g.neighbors(u).to_vector();
    closed.push_back(u);
    SymMatrix local(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i; j < closed.size(); ++j) {
            const double x = witness.gram(closed[i], closed[j]);
            if (i != j && !g.adjacent(closed[i], closed[j]) && std::abs(x) > 1e-6)
                throw std::invalid_argument("witness vectors of non-adjacent vertices are not orthogonal");
            local.set(i, j, x);
        }
    NeighborhoodOperator out;
    greedy_coloring(induced_subgraph(g, g.neighbors(u)).graph, &out.classes);
    // P = X X^T over N[u] shares its non-zero spectrum with the Gram block.
    out.lambda_max = largest_eigenvalue(local);
    out.holds = out.lambda_max <= static_cast<double>(out.classes) + 1.0 + 1e-4;
    return out;
}

TransitiveChecks transitive_closed_forms(const Graph& g, bool vertex_transitive, bool edge_transitive,
                                         const SolverConfig& cfg) {
    TransitiveChecks out;
    const double n = static_cast<double>(g.vertex_count());
    if (!vertex_transitive && !edge_transitive) return out;
    const GramWitness tg = solve_theta(g, cfg);
    out.theta_g = tg.value;
    out.certified = tg.certified;
    if (vertex_transitive) {
        const GramWitness tb = solve_theta(complement(g), cfg);
        out.theta_bar = tb.value;
        out.certified = out.certified && tb.certified;
        out.product = tg.value * tb.value;
        out.product_ok = std::abs(*out.product - n) <= 1e-3 * n;
    }
    if (edge_transitive && g.edge_count() > 0) {
        const auto spectrum = eigenvalues(adjacency_matrix(g));
        const double l1 = spectrum.front();
        const double ln = spectrum.back();
        out.formula = -n * ln / (l1 - ln);
        out.formula_ok = std::abs(tg.value - *out.formula) <= 1e-3;
    }
    return out;
}

SpectralDiagnostic spectral_surplus_diagnostic(const Graph& g) {
    SpectralDiagnostic out;
    const std::size_t n = g.vertex_count();
    if (n == 0) return out;
    out.minus_n_lambda_n = -static_cast<double>(n) * smallest_eigenvalue(adjacency_matrix(g));
    if (n <= kExactMaxCutMaxVertices) {
        out.sp_exact = exact_maxcut(g).surplus;
        if (out.minus_n_lambda_n > 0.0) out.ratio = *out.sp_exact / out.minus_n_lambda_n;
    }
    return out;
}

bool is_forest(const Graph& g) {
    // A forest has exactly n - c edges.
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges()) {
        const Vertex a = find(u);
        const Vertex b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

Fit log_log_fit(const std::vector<SizeRecord>& records) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : records)
        if (r.size > 0 && r.max_theta_bar > 0.0) {
            xs.push_back(std::log(static_cast<double>(r.size)));
            ys.push_back(std::log(r.max_theta_bar));
        }
    Fit fit;
    fit.points = xs.size();
    if (xs.size() < 2) return fit;
    const double k = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) return fit;
    fit.slope = sxy / sxx;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (my + fit.slope * (xs[i] - mx));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / k);
    return fit;
}

FamilyEstimate estimate_lambda_mu(const Graph& h, const std::string& h_name, const std::vector<std::size_t>& sizes,
                                  std::size_t samples_per_size, std::uint64_t seed, const SolverConfig& cfg,
                                  const std::vector<Graph>& extra) {
    FamilyEstimate out;
    out.forbidden = h_name;
    out.acyclic = is_forest(h);
    const double acyclic_cap = static_cast<double>(h.vertex_count()) - 1.0 + 1e-3;

    std::vector<std::size_t> ordered = sizes;
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::map<std::size_t, double> per_edges;
    double running = 0.0;
    const auto observe = [&](const Graph& g, double& size_max) {
        const GramWitness w = solve_theta(complement(g), cfg);
        ++out.samples;
        out.all_certified = out.all_certified && w.certified;
        size_max = std::max(size_max, w.value);
        if (out.acyclic && w.value > acyclic_cap) ++out.acyclic_bound_violations;
        if (g.edge_count() > 0) {
            double& slot = per_edges[g.edge_count()];
            slot = std::max(slot, w.value);
        }
    };

    for (std::size_t n : ordered) {
        double size_max = 0.0;
        for (std::size_t s = 0; s < samples_per_size; ++s) {
            const double p = (static_cast<double>(s) + 0.5) / static_cast<double>(samples_per_size);
            observe(h_free_random_graph(n, p, h, derive_seed(seed, s)), size_max);
        }
        for (const Graph& g : extra)
            if (g.vertex_count() == n && !contains_subgraph(g, h)) observe(g, size_max);
        running = std::max(running, size_max);
        out.by_vertices.push_back({n, running});
    }
    for (const auto& [m, value] : per_edges) out.by_edges.push_back({m, value});
    out.vertex_fit = log_log_fit(out.by_vertices);
    out.edge_fit = log_log_fit(out.by_edges);
    return out;
}

namespace {

std::string describe(const Check& c) {
    std::ostringstream s;
    s.precision(10);
    s << c.name << ": " << c.lhs << " > " << c.rhs << " + " << c.tolerance;
    return s.str();
}

}  // namespace

BoundReport full_report(const Graph& g, const ReportOptions& options) {
    const SolverConfig& cfg = options.solver;
    BoundReport r;
    r.id = options.id;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    const double m = static_cast<double>(r.m);
    const double pi = std::numbers::pi;

    // a failed check only counts as a violation when every solve behind it certified
    const auto check = [&](const std::string& name, double lhs, double rhs, double tol, bool trusted = true) {
        Check c{name, lhs, rhs, tol, lhs <= rhs + tol, trusted};
        if (!c.passed && trusted) r.violations.push_back(describe(c));
        r.checks.push_back(std::move(c));
    };
    const auto certified = [&](const std::string& what, bool ok) {
        if (!ok) r.uncertified.push_back(what);
    };
    for (const char* key : {"surplus_theta", "surplus_vec", "edwards", "degree_a", "degree_b", "subadditivity",
                            "trace_cube", "transitive_product", "edge_transitive_theta", "spectral_sp_diag"})
        r.bounds[key] = std::nullopt;

    const Graph bar = complement(g);
    GramWitness theta_w = solve_theta(bar, cfg);
    if (options.corrupt_witness && r.n > 1) {
        Rng rng(derive_seed(options.seed, 0xbad));
        for (std::size_t i = 0; i < r.n; ++i)
            for (std::size_t j = i + 1; j < r.n; ++j)
                theta_w.gram.set(i, j, theta_w.gram(i, j) + 1e-3 * (2.0 * uniform01(rng) - 1.0));
        theta_w.primal.reset();
    }
    const GramWitness strict_w = solve_strict_vector_coloring(g, cfg);
    const GramWitness vec_w = solve_vector_coloring(g, cfg);
    r.theta_bar = theta_w.value;
    r.strict_chi = strict_w.value;
    r.chi_vec = vec_w.value;
    certified("theta_bar", theta_w.certified);
    certified("strict_vector_coloring", strict_w.certified);
    certified("vector_coloring", vec_w.certified);

    const auto validate = [&](const std::string& name, const GramWitness& w, const Graph& graph, SdpKind kind) {
        const WitnessReport wr = validate_witness(w, graph, kind, cfg);
        Check c{name, std::max({wr.constraint_residual, wr.psd_residual, wr.diagonal_residual}), 0.0,
                kConstraintTolerance, wr.ok, w.certified};
        if (!c.passed && c.certified) {
            std::string why = name + ":";
            for (const auto& p : wr.problems) why += " " + p + ";";
            r.violations.push_back(why);
        }
        r.checks.push_back(std::move(c));
    };
    validate("witness_theta_bar", theta_w, bar, SdpKind::theta);
    validate("witness_strict", strict_w, g, SdpKind::strict);
    validate("witness_vec", vec_w, g, SdpKind::vec);

    if (r.n <= options.max_exact_n) r.sp_exact = exact_maxcut(g).surplus;
    if (r.n <= options.sandwich_max_n) {
        r.clique_number = clique_number(g);
        r.chromatic_number = chromatic_number(g);
        check("sandwich_clique", static_cast<double>(*r.clique_number), r.theta_bar, 1e-4, theta_w.certified);
        check("sandwich_chromatic", r.theta_bar, static_cast<double>(*r.chromatic_number), 1e-4, theta_w.certified);
    }

    if (r.m > 0) {
        const double b_theta = m / (pi * (r.theta_bar - 1.0));
        const double b_vec = m / (pi * (r.chi_vec - 1.0));
        r.bounds["surplus_theta"] = b_theta;
        r.bounds["surplus_vec"] = b_vec;
        check("duality", std::abs(r.strict_chi - r.theta_bar), 0.0, 2e-4, strict_w.certified && theta_w.certified);
        check("vec_le_strict", r.chi_vec, r.strict_chi, 1e-4, vec_w.certified && strict_w.certified);
        check("surplus_theta_le_vec", b_theta, b_vec, 1e-4, theta_w.certified && vec_w.certified);
        if (r.sp_exact) {
            check("surplus_vec", b_vec, *r.sp_exact, 1e-4, vec_w.certified);
            check("surplus_theta", b_theta, *r.sp_exact, 2e-4, theta_w.certified);
            const double arcsin = arcsin_bound(g, strict_w.vectors);
            check("arcsin_rounding", arcsin, *r.sp_exact, 1e-6);
            if (strict_w.certified) {
                try {
                    check("linear_rounding", corollary_bound(g, strict_w.vectors), arcsin, 1e-9);
                } catch (const std::invalid_argument& e) {
                    r.violations.push_back(std::string("linear_rounding: ") + e.what());
                }
            }
        }
    }
    r.bounds["edwards"] = edwards_bound(r.m);
    if (r.sp_exact) check("edwards", *r.bounds["edwards"], *r.sp_exact, 1e-9);

    ComplementTheta theta_bar(cfg);
    const Certified lhs{r.theta_bar, theta_w.certified};

    r.bounds["degree_a"] = degree_bound_a(g);
    check("degree_a", r.theta_bar, *r.bounds["degree_a"], 1e-4, theta_w.certified);
    const Certified db = degree_bound_b_with(g, theta_bar);
    r.bounds["degree_b"] = db.value;
    certified("degree_b", db.certified);
    check("degree_b", r.theta_bar * r.theta_bar, db.value * db.value, 1e-3, theta_w.certified && db.certified);

    if (r.n > 0) {
        Rng rng(derive_seed(options.seed, 0x5ab));
        double worst = -std::numeric_limits<double>::infinity();
        bool all_certified = true;
        for (std::size_t k = 0; k < options.bipartitions; ++k) {
            VertexSet s(r.n);
            for (Vertex v = 0; v < r.n; ++v)
                if (rng() & 1U) s.set(v);
            const Subadditivity sa = subadditivity_with(g, s, lhs, theta_bar);
            worst = std::max(worst, sa.lhs - sa.rhs);
            all_certified = all_certified && sa.certified;
        }
        if (options.bipartitions > 0) {
            r.bounds["subadditivity"] = worst;
            certified("subadditivity", all_certified);
            check("subadditivity", worst, 0.0, 3e-4, all_certified);
        }

        const double d = std::max(1.0, std::sqrt(2.0 * m));
        const DegreeDecomposition dd = decomposition_with(g, d, theta_bar);
        certified("degree_threshold", dd.certified);
        check("degree_threshold_count", static_cast<double>(dd.high.size()), 2.0 * m / d, 1e-9);
        check("degree_threshold_bound", r.theta_bar, dd.bound, 1e-4, theta_w.certified && dd.certified);
    }

    if (theta_w.certified && !options.corrupt_witness) {
        const TraceCube tc = trace_cube_check(g, theta_w);
        r.bounds["trace_cube"] = tc.trace_m3;
        check("trace_cube", tc.theta_cubed, tc.trace_m3, 1e-3);
        const double per_vertex_sum = std::accumulate(tc.per_vertex_terms.begin(), tc.per_vertex_terms.end(), 0.0);
        check("trace_cube_per_vertex", std::abs(per_vertex_sum - tc.trace_m3), 0.0, 1e-6 * std::max(1.0, tc.trace_m3));
    }
    if (theta_w.certified && r.n > 0) {
        try {
            double worst = -std::numeric_limits<double>::infinity();
            for (Vertex u = 0; u < r.n; ++u) {
                const NeighborhoodOperator op = neighborhood_operator_bound(g, u, theta_w);
                worst = std::max(worst, op.lambda_max - static_cast<double>(op.classes) - 1.0);
            }
            check("neighborhood_operator", worst, 0.0, 1e-4);
        } catch (const std::invalid_argument& e) {
            r.violations.push_back(std::string("neighborhood_operator: ") + e.what());
        }
    }

    if (options.vertex_transitive || options.edge_transitive) {
        const TransitiveChecks tc = transitive_closed_forms(g, options.vertex_transitive, options.edge_transitive, cfg);
        certified("transitive", tc.certified);
        if (tc.product) {
            r.bounds["transitive_product"] = *tc.product;
            check("transitive_product", std::abs(*tc.product - static_cast<double>(r.n)), 0.0,
                  1e-3 * static_cast<double>(r.n), tc.certified);
        }
        if (tc.formula) {
            r.bounds["edge_transitive_theta"] = *tc.formula;
            check("edge_transitive_theta", std::abs(*tc.theta_g - *tc.formula), 0.0, 1e-3, tc.certified);
        }
    }

    if (r.n > 0) r.bounds["spectral_sp_diag"] = -static_cast<double>(r.n) * smallest_eigenvalue(adjacency_matrix(g));
    return r;
}

}  // namespace thetacut
