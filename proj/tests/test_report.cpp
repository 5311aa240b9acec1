#include <doctest.h>

#include "thetacut/corpus.hpp"
#include "thetacut/generators.hpp"
#include "thetacut/graph_io.hpp"
#include "thetacut/report.hpp"

using namespace thetacut;

TEST_CASE("corpus contents") {
    const auto golden = golden_corpus(0);
    CHECK(golden.size() >= 120);
    for (const auto& e : golden) CHECK(e.graph.vertex_count() <= 35);
    const auto again = golden_corpus(0);
    for (std::size_t i = 0; i < golden.size(); ++i) CHECK(golden[i].graph == again[i].graph);
    CHECK(transitive_corpus().size() == 16);
}

TEST_CASE("verify on an empty corpus") {
    const auto res = run_verify({}, {});
    CHECK(res.exit_code == kExitOk);
    CHECK(res.document["summary"]["graphs"] == 0);
    CHECK(res.document["schema_version"] == kReportSchemaVersion);
}

TEST_CASE("verify orders by input and is independent of the worker count") {
    std::vector<CorpusEntry> corpus;
    for (std::size_t n = 3; n <= 8; ++n) corpus.push_back({"C" + std::to_string(n), cycle_graph(n), true, true});
    for (std::uint64_t s = 0; s < 6; ++s) corpus.push_back({"r" + std::to_string(s), erdos_renyi_graph(8, 0.5, s)});
    VerifyOptions one;
    VerifyOptions four;
    four.jobs = 4;
    const auto a = run_verify(corpus, one);
    const auto b = run_verify(corpus, four);
    CHECK(a.exit_code == kExitOk);
    CHECK(a.document.dump() == b.document.dump());
    CHECK(verify_csv(a) == verify_csv(b));
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(a.document["reports"][i]["id"] == corpus[i].id);
}

TEST_CASE("corrupted witness gives a violation with a reproducible graph") {
    std::vector<CorpusEntry> corpus = {{"C5", cycle_graph(5)}, {"K4", complete_graph(4)}};
    VerifyOptions vo;
    vo.corrupt_first_witness = true;
    const auto res = run_verify(corpus, vo);
    CHECK(res.exit_code == kExitViolation);
    const auto& failing = res.document["summary"]["failing"];
    REQUIRE(failing.size() == 1);
    CHECK(parse_edge_list(failing[0]["edge_list"].get<std::string>()) == cycle_graph(5));
}

TEST_CASE("json shapes") {
    const auto r = full_report(cycle_graph(5));
    const Json j = to_json(r);
    CHECK(j.begin().key() == "id");
    CHECK(j["n"] == 5);
    CHECK(j["bounds"].contains("surplus_theta"));
    CHECK(j["checks"].is_array());
    const auto e = estimate_lambda_mu(path_graph(3), "P3", {4, 6}, 2, 0);
    const std::string csv = estimate_csv(e);
    CHECK(csv.rfind("size,max_theta_bar,slope\n", 0) == 0);
    CHECK(to_json(e)["by_vertices"].size() == 2);
}
