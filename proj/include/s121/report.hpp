#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s121/validation.hpp"

namespace s121 {

/// Raised for any malformed or out-of-contract input: unknown JSON keys,
/// negative counts, bad ranges, unparseable documents. Maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { table, json, csv };

OutputFormat parse_output_format(const std::string& text);

/// Parsed facts file: a couple's timelines in one time unit plus the statute
/// parameters for that unit with any overrides applied.
struct FactsDocument {
    TimeUnit unit = TimeUnit::months;
    CoupleFacts facts;
    StatuteParams params;
};

/// Strict schema: schema_version must be 1, unknown keys are rejected at every
/// level, counts must be non-negative integers. A missing qualifying_reason
/// means false; a missing or null since_prior_exclusion means never claimed.
FactsDocument parse_facts_document(const std::string& text);
FactsDocument load_facts_document(const std::filesystem::path& file);

/// Parsed search-domain file: six inclusive ranges, fixed reason flags, an
/// optional constraint, and parameter overrides.
struct DomainDocument {
    TimeUnit unit = TimeUnit::months;
    SearchDomain domain;
    StatuteParams params;
};

DomainDocument parse_domain_document(const std::string& text);
DomainDocument load_domain_document(const std::filesystem::path& file);

/// Parsed grid facts file: one fact set per time unit, no conversion between
/// units.
struct GridFactsDocument {
    std::map<TimeUnit, CoupleFacts> facts_by_unit;
};

GridFactsDocument parse_grid_facts_document(const std::string& text);
GridFactsDocument load_grid_facts_document(const std::filesystem::path& file);

/// Report renderers. Each returns the complete byte-stable document for one
/// format. JSON reports are schema-versioned, carry every dollar amount both
/// as rounded whole dollars and as an exact numerator/denominator pair, and
/// re-emit byte-identically after a parse round trip. CSV and table cells
/// agree with the JSON after rounding; only human tables group thousands.
std::string evaluate_report(const FactsDocument& doc, const InterpretationOutcome& outcome,
                            OutputFormat format);
std::string sweep_report(long long lo, long long hi, const std::vector<SweepRow>& rows,
                         const StatuteParams& params, OutputFormat format);
std::string search_report(const DomainDocument& doc,
                          const std::vector<DivergenceWitness>& witnesses,
                          OutputFormat format);
std::string grid_report(const std::vector<GridCell>& cells, OutputFormat format);
std::string validate_report(const std::vector<RunnerReport>& runners,
                            const std::optional<DeterminismReport>& determinism,
                            OutputFormat format);

struct EvaluateCommand {
    std::filesystem::path facts_file;
    OutputFormat format = OutputFormat::table;
    std::optional<NumeratorMode> mode;
};

struct SweepCommand {
    std::string range;
    OutputFormat format = OutputFormat::table;
    int threads = 1;
};

struct SearchCommand {
    std::filesystem::path domain_file;
    OutputFormat format = OutputFormat::table;
    std::size_t limit = SIZE_MAX;
    bool override_domain_bound = false;
    int threads = 1;
};

struct GridCommand {
    std::filesystem::path facts_file;
    OutputFormat format = OutputFormat::table;
    std::vector<std::string> units;
    std::vector<std::string> rules;
};

struct ValidateCommand {
    OutputFormat format = OutputFormat::table;
    int runs = 2;
    std::filesystem::path fixtures_dir = "fixtures";
    int threads = 1;
};

/// Exit codes: 0 = consistent / all checks pass, 1 = divergence found or a
/// validation comparison failed, 2 = input or usage error.
int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_grid(const GridCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateCommand& cmd, std::ostream& out, std::ostream& err);

/// "LO..HI" with 0 <= LO <= HI. Anything else is an InputError.
std::pair<long long, long long> parse_sweep_range(const std::string& text);

}  // namespace s121
