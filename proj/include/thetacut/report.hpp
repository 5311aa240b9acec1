#ifndef THETACUT_REPORT_HPP
#define THETACUT_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetacut/bounds.hpp"
#include "thetacut/corpus.hpp"
#include "thetacut/sdp.hpp"

namespace thetacut {

using Json = nlohmann::ordered_json;

/// Bumped whenever a key is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

/// Process exit codes shared by every command.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitInputError = 2,
    kExitNotCertified = 3,
};

Json witness_summary(const GramWitness& w);
Json to_json(const BoundReport& r);
Json to_json(const FamilyEstimate& e);

/// size,max_theta_bar,slope rows (vertex counts; slope repeated per row).
std::string estimate_csv(const FamilyEstimate& e);

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::size_t max_exact_n = 30;
    std::size_t bipartitions = 50;
    SolverConfig solver;
    bool corrupt_first_witness = false;  // negative-path testing
};

struct VerifyResult {
    Json document;  // {"schema_version", "seed", "summary", "reports": [...]}
    std::vector<BoundReport> reports;
    std::size_t violating_graphs = 0;
    std::size_t uncertified_graphs = 0;
    int exit_code = kExitOk;
};

/// Full report per corpus entry. Graph i uses seed derive_seed(seed, i);
/// reports are ordered by input position whatever the worker count.
VerifyResult run_verify(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options);

/// One CSV row per report of a verify run.
std::string verify_csv(const VerifyResult& result);

}  // namespace thetacut

#endif
