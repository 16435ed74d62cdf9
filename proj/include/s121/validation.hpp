#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s121/search.hpp"

namespace s121 {

/// "A: own=30 use=30 prior=never reason=no | B: ...". The single fact-pattern
/// rendering shared by runner reports and the search report, so a fact pattern
/// always reads the same everywhere.
std::string render_fact_pattern(const CoupleFacts& c);

/// Raised when a golden fixture file is missing or structurally malformed.
/// A well-formed fixture whose cells disagree with computed values is not an
/// error; it is a failed comparison reported case by case.
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of a golden fixture file:
/// label | inputs | expected sum | expected joint | expected divergence.
struct FixtureRow {
    std::string label;
    std::string inputs;
    long long expected_sum = 0;
    long long expected_joint = 0;
    bool expected_diverges = false;
};

std::vector<FixtureRow> load_fixture(const std::filesystem::path& file);

struct ValidationContext {
    std::filesystem::path fixtures_dir = "fixtures";
    StatuteParams params = StatuteParams::defaults();
    int threads = 1;
};

/// One comparison inside a runner. Amount cases carry fixture expectations and
/// the exact computed outcome; procedural cases (determinism re-runs, zone
/// detection) carry only a note and a verdict.
struct CaseResult {
    std::string label;
    std::string inputs;
    std::optional<long long> expected_sum;
    std::optional<long long> expected_joint;
    std::optional<bool> expected_diverges;
    std::optional<InterpretationOutcome> actual;
    bool passed = false;
    std::string note;
};

struct RunnerReport {
    std::string runner_name;
    std::vector<CaseResult> cases;

    bool overall_pass() const;

    /// Byte-stable rendering of the report: a pure function of runner name and
    /// cases. No timestamps, no environment, no locale.
    std::string canonical_serialization() const;
};

/// Fully qualified couple (H 30/30, W 24/24, no prior claims): both readings
/// must agree at the unreduced joint limit.
RunnerReport run_case_no_inconsistency(const ValidationContext& ctx);

/// Ground-truth couple (H 30/30, W 12/12, W short for a qualifying reason):
/// the readings must disagree, sum 375,000 vs joint 250,000.
RunnerReport run_case_with_inconsistency(const ValidationContext& ctx);

/// Six parts: full, partial, and asymmetric qualification; a determinism
/// re-run of parts 1-3; an automated search that must rediscover a divergent
/// pattern; and zone detection over the prior-exclusion axis.
RunnerReport run_all_validation_tests(const ValidationContext& ctx);

struct JointPriorTable {
    RunnerReport report;
    std::vector<SweepRow> rows;
};

/// Sweep spouse B's prior-exclusion period over 1..36 and compare every cell
/// against the golden table. A mismatch identifies its row and column.
JointPriorTable run_joint_prior_table(const ValidationContext& ctx);

/// Test-only hook: mutates a run's serialized bytes to simulate
/// nondeterminism. Production callers leave it empty.
using SerializationPerturbation = std::function<void(std::string&, int run_index)>;

struct DeterminismReport {
    int runs = 0;
    bool identical = false;
    std::string note;
};

/// Run every runner n_runs times and byte-compare the concatenated canonical
/// serializations. Requires n_runs >= 2.
DeterminismReport determinism_check(int n_runs, const ValidationContext& ctx,
                                    const SerializationPerturbation& perturb = {});

}  // namespace s121
