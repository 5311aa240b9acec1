// thetacut command-line front end.
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetacut/bounds.hpp"
#include "thetacut/combinatorics.hpp"
#include "thetacut/corpus.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/graph_io.hpp"
#include "thetacut/maxcut.hpp"
#include "thetacut/report.hpp"
#include "thetacut/sdp.hpp"

using namespace thetacut;

namespace {

// Bad user input; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string family;
    std::string out;
    std::string format = "json";
    double tol = 0.0;  // 0 keeps the solver default
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t max_n = 200;
    std::size_t jobs = 1;
    int max_iterations = 0;  // 0 keeps the solver default
    std::vector<std::size_t> sizes;
    std::size_t samples = 20;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool corrupt_witness = false;
};

SolverConfig solver_config(const RunConfig& rc) {
    SolverConfig cfg;
    cfg.seed = rc.seed;
    if (rc.tol > 0) cfg.gap_tolerance = rc.tol;
    if (rc.max_iterations > 0) cfg.max_iterations = rc.max_iterations;
    return cfg;
}

void write_output(const RunConfig& rc, const std::string& text) {
    if (rc.out.empty() || rc.out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + rc.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// csv of a flat json object (one header line, one value line)
std::string flat_csv(const Json& j) {
    std::string head, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_structured()) continue;
        if (!head.empty()) {
            head += ',';
            row += ',';
        }
        head += it.key();
        row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    }
    return head + "\n" + row + "\n";
}

void check_format(const RunConfig& rc) {
    if (rc.format != "json" && rc.format != "csv") throw InputError("unknown format '" + rc.format + "'");
}

Graph load_graph(const RunConfig& rc) {
    if (rc.input.empty() == rc.family.empty()) throw InputError("give exactly one of --input or --family");
    Graph g;
    if (!rc.input.empty()) {
        auto graphs = read_graph_file(rc.input);
        if (graphs.size() != 1) throw InputError(rc.input + ": expected one graph, found " + std::to_string(graphs.size()));
        g = std::move(graphs.front());
    } else {
        GraphFamilySpec spec = parse_family(rc.family);
        spec.seed = rc.seed;
        g = generate(spec);
    }
    if (g.vertex_count() > rc.max_n)
        throw InputError("graph has " + std::to_string(g.vertex_count()) + " vertices, above --max-n " +
                         std::to_string(rc.max_n));
    return g;
}

int cmd_theta(const RunConfig& rc) {
    check_format(rc);
    const Graph g = load_graph(rc);
    const SolverConfig cfg = solver_config(rc);
    const GramWitness w = solve_theta(g, cfg);
    const GramWitness wc = solve_theta(complement(g), cfg);
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["theta"] = w.value;
    j["theta_complement"] = wc.value;
    j["certified"] = w.certified && wc.certified;
    j["primal_residual"] = std::max(w.primal_residual, wc.primal_residual);
    j["psd_residual"] = std::max(w.psd_residual, wc.psd_residual);
    j["iterations"] = w.iterations + wc.iterations;
    if (rc.format == "json") {
        j["witness"] = witness_summary(w);
        j["witness_complement"] = witness_summary(wc);
        write_output(rc, dump(j));
    } else {
        write_output(rc, flat_csv(j));
    }
    return w.certified && wc.certified ? kExitOk : kExitNotCertified;
}

int cmd_vecchrom(const RunConfig& rc) {
    check_format(rc);
    const Graph g = load_graph(rc);
    const SolverConfig cfg = solver_config(rc);
    const GramWitness strict = solve_strict_vector_coloring(g, cfg);
    const GramWitness vec = solve_vector_coloring(g, cfg);
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["strict_vector_chromatic"] = strict.value;
    j["vector_chromatic"] = vec.value;
    j["certified"] = strict.certified && vec.certified;
    if (rc.format == "json") {
        j["witness_strict"] = witness_summary(strict);
        j["witness_vec"] = witness_summary(vec);
        write_output(rc, dump(j));
    } else {
        write_output(rc, flat_csv(j));
    }
    return strict.certified && vec.certified ? kExitOk : kExitNotCertified;
}

int cmd_maxcut(const RunConfig& rc) {
    check_format(rc);
    const Graph g = load_graph(rc);
    if (rc.trials == 0) throw InputError("--trials must be positive");
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["edwards_bound"] = edwards_bound(g.edge_count());
    if (g.vertex_count() <= kExactMaxCutMaxVertices) {
        const Cut best = exact_maxcut(g);
        j["max_cut"] = best.cut_size;
        j["surplus"] = best.surplus;
    } else {
        j["max_cut"] = nullptr;
        j["surplus"] = nullptr;
    }
    bool certified = true;
    if (g.vertex_count() > 0) {
        const GramWitness w = solve_strict_vector_coloring(g, solver_config(rc));
        certified = w.certified;
        const RoundingOutcome r = gw_round(g, w.vectors, rc.trials, rc.seed);
        j["trials"] = r.trials;
        j["rounded_cut"] = r.best_cut.cut_size;
        j["empirical_mean_cut"] = r.empirical_mean_cut;
        j["expected_cut"] = r.closed_form_expected_cut;
        j["arcsin_bound"] = r.arcsin_bound;
        if (g.edge_count() > 0) j["surplus_lower_bound"] = g.edge_count() / (M_PI * (w.value - 1.0));
        if (rc.format == "json") {
            Json side = Json::array();
            r.best_cut.side.for_each([&](std::size_t v) { side.push_back(v); });
            j["rounded_side"] = std::move(side);
            j["witness"] = witness_summary(w);
        }
    }
    j["certified"] = certified;
    write_output(rc, rc.format == "json" ? dump(j) : flat_csv(j));
    return certified ? kExitOk : kExitNotCertified;
}

int cmd_bound(const RunConfig& rc) {
    check_format(rc);
    const Graph g = load_graph(rc);
    ReportOptions ro;
    ro.id = rc.family.empty() ? rc.input : rc.family;
    ro.vertex_transitive = rc.vertex_transitive;
    ro.edge_transitive = rc.edge_transitive;
    ro.seed = rc.seed;
    ro.solver = solver_config(rc);
    ro.corrupt_witness = rc.corrupt_witness;
    const BoundReport r = full_report(g, ro);
    Json j = to_json(r);
    if (rc.format == "json") {
        Json doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["seed"] = rc.seed;
        doc["report"] = std::move(j);
        write_output(rc, dump(doc));
    } else {
        std::ostringstream csv;
        csv.precision(10);
        csv << "name,lhs,rhs,tolerance,passed\n";
        for (const auto& c : r.checks)
            csv << c.name << ',' << c.lhs << ',' << c.rhs << ',' << c.tolerance << ',' << (c.passed ? 1 : 0) << '\n';
        write_output(rc, csv.str());
    }
    if (!r.violations.empty()) return kExitViolation;
    return r.uncertified.empty() ? kExitOk : kExitNotCertified;
}

std::vector<CorpusEntry> load_corpus(const RunConfig& rc) {
    if (rc.input.empty() == rc.family.empty()) throw InputError("give exactly one of --input or --family");
    std::vector<CorpusEntry> corpus;
    if (!rc.family.empty()) {
        if (rc.family == "golden")
            corpus = golden_corpus(rc.seed);
        else if (rc.family == "transitive")
            corpus = transitive_corpus();
        else if (rc.family == "empty")
            return {};
        else
            throw InputError("unknown corpus '" + rc.family + "' (golden, transitive, empty)");
    } else {
        const auto graphs = read_graph_file(rc.input);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            corpus.push_back({rc.input + "#" + std::to_string(i), graphs[i], rc.vertex_transitive, rc.edge_transitive});
    }
    for (const auto& e : corpus)
        if (e.graph.vertex_count() > rc.max_n)
            throw InputError(e.id + " has " + std::to_string(e.graph.vertex_count()) + " vertices, above --max-n");
    return corpus;
}

int cmd_verify(const RunConfig& rc) {
    check_format(rc);
    const auto corpus = load_corpus(rc);
    VerifyOptions vo;
    vo.seed = rc.seed;
    vo.jobs = rc.jobs;
    vo.solver = solver_config(rc);
    vo.corrupt_first_witness = rc.corrupt_witness;
    const VerifyResult res = run_verify(corpus, vo);
    write_output(rc, rc.format == "json" ? dump(res.document) : verify_csv(res));
    const Json& s = res.document["summary"];
    std::cerr << "verified " << s["graphs"].get<std::size_t>() << " graphs: " << res.violating_graphs
              << " with violations, " << res.uncertified_graphs << " not certified\n";
    for (const auto& f : s["failing"])
        std::cerr << "violation in " << f["id"].get<std::string>() << ":\n" << f["edge_list"].get<std::string>();
    return res.exit_code;
}

int cmd_estimate(const RunConfig& rc) {
    check_format(rc);
    if (rc.family.empty()) throw InputError("estimate needs --family naming the forbidden graph");
    GraphFamilySpec spec = parse_family(rc.family);
    const Graph h = generate(spec);
    std::vector<std::size_t> sizes = rc.sizes;
    if (sizes.empty()) sizes = {8, 10, 12, 14, 16};
    for (std::size_t n : sizes)
        if (n > rc.max_n || n < 1) throw InputError("size " + std::to_string(n) + " outside [1, --max-n]");
    if (rc.samples == 0) throw InputError("--samples must be positive");
    const FamilyEstimate e = estimate_lambda_mu(h, rc.family, sizes, rc.samples, rc.seed, solver_config(rc));
    write_output(rc, rc.format == "json" ? dump(to_json(e)) : estimate_csv(e));
    if (e.acyclic_bound_violations > 0) return kExitViolation;
    return e.all_certified ? kExitOk : kExitNotCertified;
}

int cmd_generate(const RunConfig& rc) {
    if (rc.family.empty()) throw InputError("generate needs --family");
    GraphFamilySpec spec = parse_family(rc.family);
    spec.seed = rc.seed;
    const Graph g = generate(spec);
    if (g.vertex_count() > rc.max_n) throw InputError("graph above --max-n");
    if (rc.format == "graph6")
        write_output(rc, to_graph6(g) + "\n");
    else if (rc.format == "edgelist" || rc.format == "json")
        write_output(rc, to_edge_list(g));
    else
        throw InputError("generate writes edgelist or graph6");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lovasz theta, vector colouring and MaxCut surplus bounds for small graphs"};
    app.require_subcommand(1);
    RunConfig rc;

    const auto common = [&](CLI::App* sub, bool graph_input) {
        if (graph_input) sub->add_option("--input", rc.input, "edge-list or graph6 file");
        sub->add_option("--family", rc.family, "generator spec, e.g. petersen, cycle:5, kneser:7,3, C3");
        sub->add_option("--out", rc.out, "output file (default stdout)");
        sub->add_option("--format", rc.format, "json or csv");
        sub->add_option("--tol", rc.tol, "certification gap tolerance");
        sub->add_option("--seed", rc.seed, "random seed (default 0)");
        sub->add_option("--max-n", rc.max_n, "largest accepted vertex count");
        sub->add_option("--max-iterations", rc.max_iterations, "solver iteration cap");
    };

    auto* theta = app.add_subcommand("theta", "theta of a graph and of its complement");
    common(theta, true);
    auto* vecchrom = app.add_subcommand("vecchrom", "strict and relaxed vector chromatic numbers");
    common(vecchrom, true);
    auto* maxcut = app.add_subcommand("maxcut", "exact MaxCut and hyperplane rounding");
    common(maxcut, true);
    maxcut->add_option("--trials", rc.trials, "rounding trials");
    auto* bound = app.add_subcommand("bound", "every bound and check on one graph");
    common(bound, true);
    auto* verify = app.add_subcommand("verify", "run every check over a corpus");
    common(verify, true);
    verify->add_option("--jobs", rc.jobs, "worker threads");
    auto* estimate = app.add_subcommand("estimate", "sampled maxima of theta over H-free graphs");
    common(estimate, false);
    estimate->add_option("--sizes", rc.sizes, "vertex counts")->delimiter(',');
    estimate->add_option("--samples", rc.samples, "graphs per size");
    auto* gen = app.add_subcommand("generate", "print a generated graph");
    common(gen, false);

    for (auto* sub : {bound, verify}) {
        sub->add_flag("--vertex-transitive", rc.vertex_transitive, "input graphs are vertex-transitive");
        sub->add_flag("--edge-transitive", rc.edge_transitive, "input graphs are edge-transitive");
        sub->add_flag("--corrupt-witness", rc.corrupt_witness, "perturb a witness (testing)")->group("");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*theta) return cmd_theta(rc);
        if (*vecchrom) return cmd_vecchrom(rc);
        if (*maxcut) return cmd_maxcut(rc);
        if (*bound) return cmd_bound(rc);
        if (*verify) return cmd_verify(rc);
        if (*estimate) return cmd_estimate(rc);
        if (*gen) return cmd_generate(rc);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, length_error
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {  // solver breakdown, e.g. eigen not converging
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitNotCertified;
    }
    return kExitInputError;
}
