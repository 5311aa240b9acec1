#include "thetacut/report.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "thetacut/graph_io.hpp"
#include "thetacut/random.hpp"

namespace thetacut {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <class T>
Json optional_number(const std::optional<T>& x) {
    return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json witness_summary(const GramWitness& w) {
    Json j;
    j["kind"] = to_string(w.kind);
    j["value"] = number(w.value);
    j["lower_bound"] = number(w.lower_bound);
    j["upper_bound"] = number(w.upper_bound);
    j["certified"] = w.certified;
    j["primal_residual"] = number(w.primal_residual);
    j["psd_residual"] = number(w.psd_residual);
    j["iterations"] = w.iterations;
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["theta_bar"] = number(r.theta_bar);
    j["chi_vec"] = number(r.chi_vec);
    j["strict_chi"] = number(r.strict_chi);
    j["sp_exact"] = optional_number(r.sp_exact);
    j["clique_number"] = optional_number(r.clique_number);
    j["chromatic_number"] = optional_number(r.chromatic_number);
    Json bounds = Json::object();
    for (const auto& [key, value] : r.bounds) bounds[key] = value ? number(*value) : Json(nullptr);
    j["bounds"] = std::move(bounds);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", number(c.lhs)},
                          {"rhs", number(c.rhs)},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"certified", c.certified}});
    j["checks"] = std::move(checks);
    j["violations"] = r.violations;
    j["uncertified"] = r.uncertified;
    return j;
}

Json to_json(const FamilyEstimate& e) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["forbidden"] = e.forbidden;
    j["samples"] = e.samples;
    j["acyclic"] = e.acyclic;
    j["acyclic_bound_violations"] = e.acyclic_bound_violations;
    j["all_certified"] = e.all_certified;
    const auto records = [](const std::vector<SizeRecord>& rs) {
        Json a = Json::array();
        for (const auto& r : rs) a.push_back({{"size", r.size}, {"max_theta_bar", number(r.max_theta_bar)}});
        return a;
    };
    const auto fit = [](const Fit& f) {
        return Json{{"slope", number(f.slope)}, {"residual", number(f.residual)}, {"points", f.points}};
    };
    j["by_vertices"] = records(e.by_vertices);
    j["vertex_fit"] = fit(e.vertex_fit);
    j["by_edges"] = records(e.by_edges);
    j["edge_fit"] = fit(e.edge_fit);
    return j;
}

std::string estimate_csv(const FamilyEstimate& e) {
    std::ostringstream out;
    out.precision(10);
    out << "size,max_theta_bar,slope\n";
    for (const auto& r : e.by_vertices) out << r.size << ',' << r.max_theta_bar << ',' << e.vertex_fit.slope << '\n';
    return out.str();
}

VerifyResult run_verify(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
    VerifyResult result;
    result.reports.resize(corpus.size());

    const auto work = [&](std::size_t i) {
        ReportOptions ro;
        ro.id = corpus[i].id;
        ro.vertex_transitive = corpus[i].vertex_transitive;
        ro.edge_transitive = corpus[i].edge_transitive;
        ro.bipartitions = options.bipartitions;
        ro.seed = derive_seed(options.seed, i);
        ro.max_exact_n = options.max_exact_n;
        ro.solver = options.solver;
        ro.corrupt_witness = options.corrupt_first_witness && i == 0;
        result.reports[i] = full_report(corpus[i].graph, ro);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, corpus.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
            });
    }

    struct Counts {
        std::size_t checked = 0, failed = 0, uncertified = 0;
    };
    std::map<std::string, Counts> per_check;
    Json reports = Json::array();
    Json failing = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const BoundReport& r = result.reports[i];
        for (const auto& c : r.checks) {
            auto& slot = per_check[c.name];
            ++slot.checked;
            if (!c.certified)
                ++slot.uncertified;
            else if (!c.passed)
                ++slot.failed;
        }
        if (!r.violations.empty()) {
            ++result.violating_graphs;
            failing.push_back({{"id", r.id}, {"edge_list", to_edge_list(corpus[i].graph)},
                               {"graph6", to_graph6(corpus[i].graph)}, {"violations", r.violations}});
        }
        if (!r.uncertified.empty()) ++result.uncertified_graphs;
        reports.push_back(to_json(r));
    }

    Json summary;
    summary["graphs"] = corpus.size();
    summary["violating_graphs"] = result.violating_graphs;
    summary["uncertified_graphs"] = result.uncertified_graphs;
    Json checks = Json::object();
    for (const auto& [name, counts] : per_check) checks[name] = {{"checked", counts.checked}, {"failed", counts.failed}, {"uncertified", counts.uncertified}};
    summary["checks"] = std::move(checks);
    summary["failing"] = std::move(failing);

    result.document["schema_version"] = kReportSchemaVersion;
    result.document["seed"] = options.seed;
    result.document["summary"] = std::move(summary);
    result.document["reports"] = std::move(reports);

    if (result.violating_graphs > 0)
        result.exit_code = kExitViolation;
    else if (result.uncertified_graphs > 0)
        result.exit_code = kExitNotCertified;
    return result;
}

std::string verify_csv(const VerifyResult& result) {
    std::ostringstream out;
    out.precision(10);
    out << "id,n,m,theta_bar,chi_vec,sp_exact,violations,uncertified\n";
    for (const auto& r : result.reports) {
        out << r.id << ',' << r.n << ',' << r.m << ',' << r.theta_bar << ',' << r.chi_vec << ',';
        if (r.sp_exact) out << *r.sp_exact;
        out << ',' << r.violations.size() << ',' << r.uncertified.size() << '\n';
    }
    return out.str();
}

}  // namespace thetacut
