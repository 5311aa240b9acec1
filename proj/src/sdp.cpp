#include "thetacut/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetacut/random.hpp"

namespace thetacut {

std::string to_string(SdpKind kind) {
    switch (kind) {
        case SdpKind::theta: return "theta";
        case SdpKind::strict: return "strict";
        case SdpKind::vec: return "vec";
    }
    return "unknown";
}

SymMatrix theta_gram_from_primal(const SymMatrix& b) {
    const std::size_t n = b.dim();
    std::vector<double> scale(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) scale[v] = b(v, v) > 0.0 ? 1.0 / std::sqrt(b(v, v)) : 0.0;
    SymMatrix m(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) m.set(u, v, b(u, v) * scale[u] * scale[v]);
        m.set(u, u, 1.0);
    }
    return m;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bracket {
    double lower = -kInf;
    double upper = kInf;
};

// A feasible point found so far, in the objective units of the program.
struct Feasible {
    double objective = 0.0;
    SymMatrix matrix;
};

double kappa_from_edge_value(double t) { return 1.0 - 1.0 / t; }

// ---------------------------------------------------------------------------
// Programs. Each exposes:
//   initial()                          starting PSD iterate
//   project(V, rho)                    prox of the objective over the affine/convex set
//   feasible(Z)                        nearby exactly-feasible point (or nullopt)
//   dual_bound(U, rho)                 rigorous bound from the scaled multipliers
//   better(a, b)                       whether objective a improves on b
//   gap(lower, upper)                  gap in reported units (theta or kappa)

class ThetaProgram {
public:
    explicit ThetaProgram(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {}

    SymMatrix initial() const { return SymMatrix::identity(n_) * (1.0 / static_cast<double>(n_)); }

    // argmin -<J,M> + rho/2 ||M - V||^2 over {tr M = 1, M_e = 0}
    SymMatrix project(const SymMatrix& v, double rho) const {
        SymMatrix m = v;
        const double step = 1.0 / rho;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) m.set(i, j, v(i, j) + step);
        for (const auto& [a, b] : edges_) m.set(a, b, 0.0);
        double tr = 0.0;
        for (std::size_t i = 0; i < n_; ++i) tr += v(i, i) + step;
        const double shift = (tr - 1.0) / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) m.set(i, i, v(i, i) + step - shift);
        return m;
    }

    std::optional<Feasible> feasible(const SymMatrix& z) const {
        SymMatrix b = z;
        for (const auto& [a, c] : edges_) b.set(a, c, 0.0);
        const double shift = std::max(0.0, -smallest_eigenvalue(b));
        b.add_diagonal(shift);
        const double tr = b.trace();
        if (!(tr > 0.0)) return std::nullopt;
        b *= 1.0 / tr;
        return Feasible{b.sum(), std::move(b)};
    }

    // theta <= lambda_max(Y) for any Y with ones on the diagonal and on
    // non-edges. The multiplier S = -rho U satisfies y_e = 1 + S_e, so the
    // edge entries 1 - y_e are rho U_e.
    double dual_bound(const SymMatrix& u, double rho) const {
        SymMatrix y = SymMatrix::constant(n_, 1.0);
        for (const auto& [a, b] : edges_) y.set(a, b, rho * u(a, b));
        return largest_eigenvalue(y);
    }

    static bool better(double a, double b) { return a > b; }
    Bracket bracket(double feasible_objective, double dual) const { return {feasible_objective, dual}; }
    double value(double feasible_objective) const { return feasible_objective; }

    Feasible trivial() const {
        return Feasible{1.0, SymMatrix::identity(n_) * (1.0 / static_cast<double>(n_))};
    }
    double trivial_dual() const { return static_cast<double>(n_); }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

class ColoringProgram {
public:
    ColoringProgram(const Graph& g, bool relaxed) : n_(g.vertex_count()), edges_(g.edges()), relaxed_(relaxed) {}

    SymMatrix initial() const { return SymMatrix::identity(n_); }

    // argmin t + rho/2 ||M - V||^2 over {M_vv = 1, M_e = t} (strict) or
    // {M_vv = 1, M_e <= t} (relaxed); each edge appears twice in the norm.
    SymMatrix project(const SymMatrix& v, double rho) const {
        SymMatrix m = v;
        for (std::size_t i = 0; i < n_; ++i) m.set(i, i, 1.0);
        const double half_step = 1.0 / (2.0 * rho);
        if (!relaxed_) {
            double mean = 0.0;
            for (const auto& [a, b] : edges_) mean += v(a, b);
            mean /= static_cast<double>(edges_.size());
            const double t = mean - half_step / static_cast<double>(edges_.size());
            for (const auto& [a, b] : edges_) m.set(a, b, t);
            return m;
        }
        // t solves sum_e max(0, V_e - t) = 1/(2 rho); edges then clamp to min(V_e, t).
        std::vector<double> vals;
        vals.reserve(edges_.size());
        for (const auto& [a, b] : edges_) vals.push_back(v(a, b));
        std::sort(vals.begin(), vals.end(), std::greater<>());
        double prefix = 0.0;
        double t = 0.0;
        for (std::size_t k = 1; k <= vals.size(); ++k) {
            prefix += vals[k - 1];
            t = (prefix - half_step) / static_cast<double>(k);
            if (k == vals.size() || t >= vals[k]) break;
        }
        for (const auto& [a, b] : edges_) m.set(a, b, std::min(v(a, b), t));
        return m;
    }

    std::optional<Feasible> feasible(const SymMatrix& z) const {
        SymMatrix m = z;
        for (std::size_t i = 0; i < n_; ++i) m.set(i, i, 1.0);
        double t = 0.0;
        if (relaxed_) {
            t = -kInf;
            for (const auto& [a, b] : edges_) t = std::max(t, z(a, b));
        } else {
            for (const auto& [a, b] : edges_) t += z(a, b);
            t /= static_cast<double>(edges_.size());
            for (const auto& [a, b] : edges_) m.set(a, b, t);
        }
        const double shift = std::max(0.0, -smallest_eigenvalue(m));
        m.add_diagonal(shift);
        m *= 1.0 / (1.0 + shift);
        for (std::size_t i = 0; i < n_; ++i) m.set(i, i, 1.0);
        t /= 1.0 + shift;
        if (!(t < 0.0)) return std::nullopt;
        if (!relaxed_)
            for (const auto& [a, b] : edges_) m.set(a, b, t);
        return Feasible{t, std::move(m)};
    }

    // For PSD S supported on the diagonal and edges (edge entries >= 0 in
    // the relaxed program), <S, M> >= 0 gives t >= -tr(S) / (2 sum_e S_e).
    double dual_bound(const SymMatrix& u, double rho) const {
        SymMatrix s(n_);
        for (std::size_t i = 0; i < n_; ++i) s.set(i, i, -rho * u(i, i));
        for (const auto& [a, b] : edges_) {
            const double x = -rho * u(a, b);
            s.set(a, b, relaxed_ ? std::max(0.0, x) : x);
        }
        const double shift = std::max(0.0, -smallest_eigenvalue(s));
        s.add_diagonal(shift);
        double edge_sum = 0.0;
        for (const auto& [a, b] : edges_) edge_sum += s(a, b);
        if (!(edge_sum > 0.0)) return -kInf;
        return -s.trace() / (2.0 * edge_sum);
    }

    static bool better(double a, double b) { return a < b; }
    Bracket bracket(double feasible_t, double dual_t) const {
        const double lo = dual_t > -1.0 ? kappa_from_edge_value(std::min(dual_t, -1e-300)) : 2.0;
        return {std::max(2.0, lo), kappa_from_edge_value(feasible_t)};
    }
    double value(double feasible_t) const { return std::max(2.0, kappa_from_edge_value(feasible_t)); }

    // Regular simplex: feasible for every graph with at least two vertices.
    Feasible trivial() const {
        const double t = -1.0 / static_cast<double>(n_ - 1);
        SymMatrix m = SymMatrix::constant(n_, t);
        for (std::size_t i = 0; i < n_; ++i) m.set(i, i, 1.0);
        return Feasible{t, std::move(m)};
    }
    double trivial_dual() const { return -1.0; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    bool relaxed_;
};

struct AdmmResult {
    Feasible best;
    double dual = 0.0;
    int iterations = 0;
    bool certified = false;
};

template <class Program>
AdmmResult run_admm(const Program& program, std::size_t n, const SolverConfig& cfg) {
    AdmmResult result{program.trivial(), program.trivial_dual(), 0, false};
    const auto gap_closed = [&]() {
        const Bracket br = program.bracket(result.best.objective, result.dual);
        const double scale = std::max(1.0, std::abs(program.value(result.best.objective)));
        return br.upper - br.lower <= cfg.gap_tolerance * scale;
    };
    const auto certify = [&](const SymMatrix& z, const SymMatrix& u, double rho) {
        if (auto f = program.feasible(z); f && Program::better(f->objective, result.best.objective))
            result.best = std::move(*f);
        const double d = program.dual_bound(u, rho);
        if (Program::better(result.dual, d)) result.dual = d;
        return gap_closed();
    };

    SymMatrix z = program.initial();
    SymMatrix u(n);
    double rho = cfg.penalty;
    Matrix basis = Matrix::identity(n);
    std::vector<double> clamped(n);

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        result.iterations = it;
        const SymMatrix m = program.project(z - u, rho);
        const SymMatrix w = m + u;
        const EigenDecomposition e = eigen(w, basis);
        for (std::size_t i = 0; i < n; ++i) clamped[i] = std::max(0.0, e.eigenvalues[i]);
        SymMatrix z_next = reassemble(e, clamped);
        basis = e.eigenvectors;

        const double r_primal = frobenius_distance(m, z_next);
        const double r_dual = rho * frobenius_distance(z_next, z);
        u += m;
        u -= z_next;
        z = std::move(z_next);

        if (it % cfg.check_interval == 0 || it == cfg.max_iterations) {
            if (certify(z, u, rho)) {
                result.certified = true;
                return result;
            }
        }

        if (it % 10 == 0) {
            // Residual balancing on relative residuals; rescale u to keep rho*u fixed.
            const double p_rel = r_primal / std::max({m.frobenius_norm(), z.frobenius_norm(), 1e-12});
            const double d_rel = r_dual / std::max(rho * u.frobenius_norm(), 1e-12);
            if (p_rel > 10.0 * d_rel && rho < 1e6) {
                rho *= 2.0;
                u *= 0.5;
            } else if (d_rel > 10.0 * p_rel && rho > 1e-6) {
                rho *= 0.5;
                u *= 2.0;
            }
        }
    }
    result.certified = gap_closed();
    return result;
}

// Residuals recomputed from the final witness matrix.
void fill_residuals(GramWitness& w, const Graph& g) {
    const double lam_min = w.gram.dim() == 0 ? 0.0 : smallest_eigenvalue(w.gram);
    w.psd_residual = std::max(0.0, -lam_min);
    double worst = 0.0;
    for (std::size_t v = 0; v < w.gram.dim(); ++v) worst = std::max(worst, std::abs(w.gram(v, v) - 1.0));
    for (const auto& [a, b] : g.edges()) {
        const double x = w.gram(a, b);
        switch (w.kind) {
            case SdpKind::theta: worst = std::max(worst, std::abs(x)); break;
            case SdpKind::strict: worst = std::max(worst, std::abs(x - w.edge_value)); break;
            case SdpKind::vec: worst = std::max(worst, std::max(0.0, x - w.edge_value)); break;
        }
    }
    w.primal_residual = worst;
}

void finish(GramWitness& w, const Graph& g) {
    w.vectors = gram_factor(w.gram);
    fill_residuals(w, g);
}

GramWitness exact_theta(const Graph& g, double value, SymMatrix primal) {
    GramWitness w;
    w.kind = SdpKind::theta;
    w.value = value;
    w.lower_bound = value;
    w.upper_bound = value;
    w.certified = true;
    w.gram = theta_gram_from_primal(primal);
    w.primal = std::move(primal);
    finish(w, g);
    return w;
}

GramWitness exact_coloring(const Graph& g, SdpKind kind, double kappa, double t, SymMatrix gram) {
    GramWitness w;
    w.kind = kind;
    w.value = kappa;
    w.lower_bound = kappa;
    w.upper_bound = kappa;
    w.edge_value = t;
    w.certified = true;
    w.gram = std::move(gram);
    finish(w, g);
    return w;
}

// +-1 Gram for a 2-colouring (all ones when there is no edge to separate).
SymMatrix antipodal_gram(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, 0);
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            g.neighbors(x).for_each([&](Vertex y) {
                if (!seen[y]) {
                    seen[y] = true;
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                }
            });
        }
    }
    SymMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v) m.set(u, v, side[u] == side[v] ? 1.0 : -1.0);
    return m;
}

GramWitness solve_coloring(const Graph& g, const SolverConfig& cfg, SdpKind kind) {
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == 0 || is_bipartite(g)) return exact_coloring(g, kind, 2.0, -1.0, antipodal_gram(g));
    if (g.is_complete()) {
        const double t = -1.0 / static_cast<double>(n - 1);
        SymMatrix m = SymMatrix::constant(n, t);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
        return exact_coloring(g, kind, static_cast<double>(n), t, std::move(m));
    }
    const ColoringProgram program(g, kind == SdpKind::vec);
    AdmmResult r = run_admm(program, n, cfg);
    GramWitness w;
    w.kind = kind;
    w.edge_value = r.best.objective;
    w.value = program.value(r.best.objective);
    const Bracket br = program.bracket(r.best.objective, r.dual);
    w.lower_bound = br.lower;
    w.upper_bound = std::max(2.0, br.upper);
    w.iterations = r.iterations;
    w.gram = std::move(r.best.matrix);
    finish(w, g);
    w.certified = r.certified && w.psd_residual <= cfg.tolerance && w.primal_residual <= kConstraintTolerance;
    return w;
}

}  // namespace

GramWitness solve_theta(const Graph& g, const SolverConfig& cfg) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return exact_theta(g, 0.0, SymMatrix(0));
    const double inv_n = 1.0 / static_cast<double>(n);
    if (g.edge_count() == 0) return exact_theta(g, static_cast<double>(n), SymMatrix::constant(n, inv_n));
    if (g.is_complete()) return exact_theta(g, 1.0, SymMatrix::identity(n) * inv_n);

    const ThetaProgram program(g);
    AdmmResult r = run_admm(program, n, cfg);
    GramWitness w;
    w.kind = SdpKind::theta;
    w.value = r.best.objective;
    w.lower_bound = r.best.objective;
    w.upper_bound = r.dual;
    w.iterations = r.iterations;
    w.gram = theta_gram_from_primal(r.best.matrix);
    w.primal = std::move(r.best.matrix);
    finish(w, g);
    w.certified = r.certified && w.psd_residual <= cfg.tolerance && w.primal_residual <= kConstraintTolerance;
    return w;
}

GramWitness solve_strict_vector_coloring(const Graph& g, const SolverConfig& cfg) {
    return solve_coloring(g, cfg, SdpKind::strict);
}

GramWitness solve_vector_coloring(const Graph& g, const SolverConfig& cfg) {
    return solve_coloring(g, cfg, SdpKind::vec);
}

WitnessReport validate_witness(const GramWitness& w, const Graph& g, SdpKind kind, const SolverConfig& cfg) {
    WitnessReport report;
    const std::size_t n = g.vertex_count();
    if (w.gram.dim() != n) {
        report.ok = false;
        report.problems.push_back("gram dimension does not match the graph");
        return report;
    }
    const auto flag = [&](bool bad, const std::string& what) {
        if (bad) {
            report.ok = false;
            report.problems.push_back(what);
        }
    };

    report.psd_residual = n == 0 ? 0.0 : std::max(0.0, -smallest_eigenvalue(w.gram));
    for (std::size_t v = 0; v < n; ++v)
        report.diagonal_residual = std::max(report.diagonal_residual, std::abs(w.gram(v, v) - 1.0));
    const double t = kind == SdpKind::theta ? 0.0 : -1.0 / (w.value - 1.0);
    for (const auto& [a, b] : g.edges()) {
        const double x = w.gram(a, b);
        double violation = 0.0;
        switch (kind) {
            case SdpKind::theta: violation = std::abs(x); break;
            case SdpKind::strict: violation = std::abs(x - t); break;
            case SdpKind::vec: violation = std::max(0.0, x - t); break;
        }
        report.constraint_residual = std::max(report.constraint_residual, violation);
    }
    flag(report.psd_residual > cfg.tolerance, "gram is not PSD within tolerance");
    flag(report.diagonal_residual > kDiagonalTolerance, "gram diagonal is not unit");
    flag(report.constraint_residual > kConstraintTolerance, "edge constraints violated");

    if (kind == SdpKind::theta && n > 0) {
        const SymMatrix m = w.primal ? theta_gram_from_primal(*w.primal) : w.gram;
        const double lam = largest_eigenvalue(m);
        report.lambda_max = lam;
        flag(lam < w.value - 1e-4 || lam > w.value + 1e-3, "largest Gram eigenvalue disagrees with the value");

        // Second characterisation: sum_v <x, x_v>^2 over random unit x.
        std::vector<std::vector<double>> xs;
        try {
            xs = gram_factor(m);
        } catch (const NotPsdError&) {
            flag(true, "eigenvalue-form Gram cannot be factored");
            return report;
        }
        const std::size_t dim = xs.empty() ? 0 : xs.front().size();
        Rng rng(derive_seed(cfg.seed, 0x7e57));
        double best = 0.0;
        std::vector<double> x(dim);
        for (int sample = 0; sample < 256 && dim > 0; ++sample) {
            double nx = 0.0;
            for (double& c : x) {
                c = standard_normal(rng);
                nx += c * c;
            }
            nx = std::sqrt(nx);
            double total = 0.0;
            for (const auto& xv : xs) {
                const double p = dot(x, xv) / nx;
                total += p * p;
            }
            best = std::max(best, total);
        }
        report.sampled_max = best;
        flag(best > w.value + 1e-3, "sampled sum of squared projections exceeds the value");
    }
    return report;
}

}  // namespace thetacut
