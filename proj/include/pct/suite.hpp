#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pct/conjugate.hpp"
#include "pct/embedding.hpp"
#include "pct/identities.hpp"

namespace pct {

struct SuiteInstance {
    std::string id;
    Embedding l;
    Mode mode = Mode::sphere;
    int outer_face = -1;  // disk only
    uint64_t seed = 0;    // orientation seed
};

/// One row of the claims report.  Hard rows are mathematically forced facts;
/// informal rows record the conjectural layer (coloring evidence, the
/// reverse-conversion bound, the increment-parity remark) whose
/// disagreements produce warnings and artifacts instead of failures.
struct ClaimOutcome {
    std::string claim_id;
    std::string instance_id;
    uint64_t seed = 0;
    std::string predicted;
    std::string observed;
    bool agree = false;
    bool hard = true;
    std::string artifact;
};

struct SuiteOptions {
    int exhaustive_max = 6;  // exhaustive classes for n = 4..exhaustive_max; 0 disables
    bool include_triangle = false;
    int random_count = 0;
    int random_max_n = 20;
    int disk_count = 0;
    uint64_t seed = 1;
    int feasibility_seeds = 3;
    int chromatic_size_cap = 30;
    bool strict_claims = false;
    int table_k_max = 50;
    std::string out_dir;  // empty: no files written
    bool verbose = false;
};

struct SuiteResult {
    int instances = 0;
    int hard_failures = 0;
    int informal_disagreements = 0;
    std::vector<ClaimOutcome> outcomes;

    bool hard_ok() const { return hard_failures == 0; }
    int exit_code(bool strict) const
    {
        if (hard_failures > 0)
            return 1;
        return (strict && informal_disagreements > 0) ? 1 : 0;
    }
};

std::vector<SuiteInstance> build_corpus(const SuiteOptions& opt);

SuiteResult run_suite(const std::vector<SuiteInstance>& instances, const SuiteOptions& opt);

/// report.csv: claim_id,instance_id,seed,predicted,observed,agree
std::string outcomes_csv(const std::vector<ClaimOutcome>& outcomes);

/// Wide per-instance table of the identity ledger fields.
std::string identities_csv(const std::vector<std::pair<std::string, IdentityReport>>& reports);

void write_relation_outputs(const RelationTables& tables, const std::string& dir);

}  // namespace pct
