#include "s121/validation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace s121 {

namespace {

std::string render_spouse(const char* name, const SpouseTimeline& t) {
    std::string prior = t.since_prior_exclusion
                            ? std::to_string(t.since_prior_exclusion->count())
                            : std::string("never");
    return std::string(name) + ": own=" + std::to_string(t.ownership.count()) +
           " use=" + std::to_string(t.use.count()) + " prior=" + prior +
           " reason=" + (t.qualifying_reason ? "yes" : "no");
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_fixture_int(const std::string& cell, const std::string& where) {
    long long value = 0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw FixtureError("fixture cell is not an integer (" + where + "): '" + cell + "'");
    return value;
}

bool parse_fixture_bool(const std::string& cell, const std::string& where) {
    if (cell == "yes") return true;
    if (cell == "no") return false;
    throw FixtureError("fixture cell is not yes/no (" + where + "): '" + cell + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string exact_text(const Money& m) {
    return m.numerator().str() + "/" + m.denominator().str();
}

const FixtureRow& find_fixture_row(const std::vector<FixtureRow>& rows,
                                   const std::string& label,
                                   const std::filesystem::path& file) {
    for (const FixtureRow& row : rows)
        if (row.label == label) return row;
    throw FixtureError("fixture " + file.string() + " has no row labeled '" + label + "'");
}

/// Compare one computed (sum, joint, diverges) triple against a fixture row.
/// Dollar cells compare after rounding (the fixture stores whole dollars);
/// the divergence flag was decided exactly before any rounding.
CaseResult compare_against_fixture(const std::string& label, const std::string& inputs,
                                   const FixtureRow& row,
                                   const InterpretationOutcome& actual) {
    CaseResult c;
    c.label = label;
    c.inputs = inputs;
    c.expected_sum = row.expected_sum;
    c.expected_joint = row.expected_joint;
    c.expected_diverges = row.expected_diverges;
    c.actual = actual;

    std::string mismatches;
    auto mismatch = [&](const std::string& column, const std::string& expected,
                        const std::string& got) {
        if (!mismatches.empty()) mismatches += "; ";
        mismatches += "row " + label + ", column " + column + ": expected " + expected +
                      ", actual " + got;
    };
    if (row.inputs != inputs)
        mismatch("inputs", "'" + row.inputs + "'", "'" + inputs + "'");
    if (actual.sum_reading.rounded_dollars_i64() != row.expected_sum)
        mismatch("sum", std::to_string(row.expected_sum),
                 actual.sum_reading.rounded_dollars().str());
    if (actual.joint_reading.rounded_dollars_i64() != row.expected_joint)
        mismatch("joint", std::to_string(row.expected_joint),
                 actual.joint_reading.rounded_dollars().str());
    if (actual.diverges != row.expected_diverges)
        mismatch("diverges", yes_no(row.expected_diverges), yes_no(actual.diverges));

    c.passed = mismatches.empty();
    c.note = mismatches;
    return c;
}

CaseResult amount_case(const std::string& label, const CoupleFacts& facts,
                       const std::vector<FixtureRow>& fixture,
                       const std::filesystem::path& file, const ValidationContext& ctx) {
    const FixtureRow& row = find_fixture_row(fixture, label, file);
    return compare_against_fixture(label, render_fact_pattern(facts), row,
                                   evaluate(facts, ctx.params));
}

SpouseTimeline spouse(long long own, long long use,
                      std::optional<long long> prior, bool reason) {
    SpouseTimeline t;
    t.ownership = PeriodLength(own);
    t.use = PeriodLength(use);
    if (prior) t.since_prior_exclusion = PeriodLength(*prior);
    t.qualifying_reason = reason;
    return t;
}

std::string render_case_line(const CaseResult& c) {
    auto opt_int = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    auto opt_bool = [](const std::optional<bool>& v) {
        return v ? yes_no(*v) : std::string("-");
    };
    std::string line = "case=" + c.label + "|inputs=" + c.inputs +
                       "|expected_sum=" + opt_int(c.expected_sum) +
                       "|expected_joint=" + opt_int(c.expected_joint) +
                       "|expected_diverges=" + opt_bool(c.expected_diverges);
    if (c.actual) {
        line += "|actual_sum=" + c.actual->sum_reading.rounded_dollars().str() +
                "|actual_sum_exact=" + exact_text(c.actual->sum_reading) +
                "|actual_joint=" + c.actual->joint_reading.rounded_dollars().str() +
                "|actual_joint_exact=" + exact_text(c.actual->joint_reading) +
                "|actual_diverges=" + yes_no(c.actual->diverges);
    } else {
        line += "|actual_sum=-|actual_sum_exact=-|actual_joint=-|actual_joint_exact=-|actual_diverges=-";
    }
    line += "|note=" + c.note + "|pass=" + yes_no(c.passed);
    return line;
}

/// Shared scenario facts. The short-timeline spouse carries the qualifying
/// reason; a fully qualified spouse does not need one.
CoupleFacts full_qualification_facts() {
    return {spouse(30, 30, std::nullopt, false), spouse(24, 24, std::nullopt, false)};
}

CoupleFacts ground_truth_facts() {
    return {spouse(30, 30, std::nullopt, false), spouse(12, 12, std::nullopt, true)};
}

CoupleFacts partial_qualification_facts() {
    return {spouse(18, 18, std::nullopt, true), spouse(24, 24, std::nullopt, false)};
}

CoupleFacts asymmetric_qualification_facts() {
    return {spouse(30, 30, std::nullopt, false), spouse(12, 24, std::nullopt, true)};
}

CoupleFacts sweep_scenario_facts(long long prior_b) {
    return {spouse(120, 120, 120, false), spouse(120, 120, prior_b, true)};
}

std::string render_zones(const std::vector<std::pair<long long, long long>>& zones) {
    if (zones.empty()) return "none";
    std::string text;
    for (const auto& [lo, hi] : zones) {
        if (!text.empty()) text += " ";
        text += "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
    return text;
}

}  // namespace

std::string render_fact_pattern(const CoupleFacts& c) {
    return render_spouse("A", c.spouse_a) + "; " + render_spouse("B", c.spouse_b);
}

std::vector<FixtureRow> load_fixture(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw FixtureError("fixture file missing or unreadable: " + file.string());

    std::vector<FixtureRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;

        std::vector<std::string> cells;
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, '|')) cells.push_back(trim(cell));
        std::string where = file.filename().string() + ":" + std::to_string(line_no);
        if (cells.size() != 5)
            throw FixtureError("fixture row must have 5 pipe-delimited cells (" + where + ")");

        FixtureRow row;
        row.label = cells[0];
        row.inputs = cells[1];
        row.expected_sum = parse_fixture_int(cells[2], where);
        row.expected_joint = parse_fixture_int(cells[3], where);
        row.expected_diverges = parse_fixture_bool(cells[4], where);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool RunnerReport::overall_pass() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.passed; });
}

std::string RunnerReport::canonical_serialization() const {
    std::string out = "runner=" + runner_name + "\n";
    for (const CaseResult& c : cases) out += render_case_line(c) + "\n";
    out += std::string("overall=") + (overall_pass() ? "pass" : "fail") + "\n";
    return out;
}

RunnerReport run_case_no_inconsistency(const ValidationContext& ctx) {
    RunnerReport report;
    report.runner_name = "run_case_no_inconsistency";
    auto file = ctx.fixtures_dir / "run_case_no_inconsistency.golden";
    auto fixture = load_fixture(file);
    report.cases.push_back(
        amount_case("full_qualification", full_qualification_facts(), fixture, file, ctx));
    return report;
}

RunnerReport run_case_with_inconsistency(const ValidationContext& ctx) {
    RunnerReport report;
    report.runner_name = "run_case_with_inconsistency";
    auto file = ctx.fixtures_dir / "run_case_with_inconsistency.golden";
    auto fixture = load_fixture(file);
    report.cases.push_back(
        amount_case("ground_truth", ground_truth_facts(), fixture, file, ctx));
    return report;
}

RunnerReport run_all_validation_tests(const ValidationContext& ctx) {
    RunnerReport report;
    report.runner_name = "run_all_validation_tests";
    auto file = ctx.fixtures_dir / "run_all_validation_tests.golden";
    auto fixture = load_fixture(file);

    auto parts_1_to_3 = [&] {
        std::vector<CaseResult> cases;
        cases.push_back(amount_case("part1_full_qualification", full_qualification_facts(),
                                    fixture, file, ctx));
        cases.push_back(amount_case("part2_partial_qualification",
                                    partial_qualification_facts(), fixture, file, ctx));
        cases.push_back(amount_case("part3_asymmetric_qualification",
                                    asymmetric_qualification_facts(), fixture, file, ctx));
        return cases;
    };
    report.cases = parts_1_to_3();

    {
        RunnerReport first{"parts_1_to_3", report.cases};
        RunnerReport second{"parts_1_to_3", parts_1_to_3()};
        CaseResult rerun;
        rerun.label = "part4_determinism_rerun";
        rerun.inputs = "parts 1-3 recomputed and byte-compared";
        rerun.passed = first.canonical_serialization() == second.canonical_serialization();
        rerun.note = rerun.passed ? "byte-identical" : "re-run produced different bytes";
        report.cases.push_back(rerun);
    }

    {
        SearchDomain domain;
        domain.own_a = domain.use_a = domain.prior_a = {120, 120};
        domain.own_b = domain.use_b = {120, 120};
        domain.prior_b = {1, 36};
        domain.reason_b = true;
        SearchOptions options;
        options.threads = ctx.threads;
        auto witnesses = bounded_search(domain, ctx.params, options);

        const FixtureRow& row = find_fixture_row(fixture, "part5_search_rediscovery", file);
        auto hit = std::find_if(witnesses.begin(), witnesses.end(),
                                [](const DivergenceWitness& w) {
                                    return w.facts.spouse_b.since_prior_exclusion ==
                                           PeriodLength(23);
                                });
        if (hit == witnesses.end()) {
            CaseResult missing;
            missing.label = "part5_search_rediscovery";
            missing.inputs = row.inputs;
            missing.expected_sum = row.expected_sum;
            missing.expected_joint = row.expected_joint;
            missing.expected_diverges = row.expected_diverges;
            missing.passed = false;
            missing.note = "search returned " + std::to_string(witnesses.size()) +
                           " witnesses but none with prior=23";
            report.cases.push_back(missing);
        } else {
            report.cases.push_back(compare_against_fixture(
                "part5_search_rediscovery", render_fact_pattern(hit->facts), row,
                hit->outcome));
        }
    }

    {
        auto zones = find_inconsistency_zone(VariableId::prior_b, 1, 36,
                                             sweep_scenario_facts(1), ctx.params);
        std::vector<std::pair<long long, long long>> expected{{1, 23}};
        CaseResult zone;
        zone.label = "part6_zone_detection";
        zone.inputs = "vary prior_b over 1..36 with " + render_fact_pattern(sweep_scenario_facts(1));
        zone.passed = zones == expected;
        zone.note = "expected zones " + render_zones(expected) + ", actual " + render_zones(zones);
        report.cases.push_back(zone);
    }

    return report;
}

JointPriorTable run_joint_prior_table(const ValidationContext& ctx) {
    JointPriorTable result;
    result.report.runner_name = "run_joint_prior_table";
    auto file = ctx.fixtures_dir / "run_joint_prior_table.golden";
    auto fixture = load_fixture(file);

    constexpr long long kLo = 1, kHi = 36;
    result.rows = sweep_prior_exclusion(kLo, kHi, ctx.params, ctx.threads);

    std::set<std::string> seen;
    for (const FixtureRow& row : fixture) {
        std::size_t slash = row.label.find('/');
        if (slash == std::string::npos)
            throw FixtureError("sweep fixture label must be P=<n>/<column>: '" + row.label + "'");
        std::string p_part = row.label.substr(0, slash);
        std::string column = row.label.substr(slash + 1);
        if (p_part.rfind("P=", 0) != 0)
            throw FixtureError("sweep fixture label must start with P=: '" + row.label + "'");
        long long p_value = parse_fixture_int(p_part.substr(2), row.label);
        if (p_value < kLo || p_value > kHi)
            throw FixtureError("sweep fixture row outside table range: '" + row.label + "'");
        if (!seen.insert(row.label).second)
            throw FixtureError("duplicate sweep fixture row: '" + row.label + "'");

        const SweepRow& computed = result.rows[static_cast<std::size_t>(p_value - kLo)];
        Money cell;
        if (column == "min_six") {
            cell = computed.min_six;
        } else if (column == "min_three_joint") {
            cell = computed.min_three_joint;
        } else if (column == "held_b2A_months") {
            cell = computed.held_b2a;
        } else {
            throw FixtureError("unknown sweep fixture column: '" + column + "'");
        }

        InterpretationOutcome actual;
        actual.sum_reading = computed.sum_a;
        actual.joint_reading = cell;
        actual.delta = actual.sum_reading - actual.joint_reading;
        actual.diverges = actual.sum_reading != actual.joint_reading;
        result.report.cases.push_back(compare_against_fixture(
            row.label, "P=" + std::to_string(p_value), row, actual));
    }

    std::size_t expected_rows = static_cast<std::size_t>(kHi - kLo + 1) * 3;
    if (seen.size() != expected_rows)
        throw FixtureError("sweep fixture covers " + std::to_string(seen.size()) +
                           " cells, expected " + std::to_string(expected_rows));
    return result;
}

DeterminismReport determinism_check(int n_runs, const ValidationContext& ctx,
                                    const SerializationPerturbation& perturb) {
    if (n_runs < 2) throw std::invalid_argument("determinism check needs at least 2 runs");

    DeterminismReport result;
    result.runs = n_runs;
    result.identical = true;

    std::string baseline;
    for (int run = 0; run < n_runs; ++run) {
        std::string bytes;
        bytes += run_case_no_inconsistency(ctx).canonical_serialization();
        bytes += run_case_with_inconsistency(ctx).canonical_serialization();
        bytes += run_all_validation_tests(ctx).canonical_serialization();
        bytes += run_joint_prior_table(ctx).report.canonical_serialization();
        if (perturb) perturb(bytes, run);

        if (run == 0) {
            baseline = std::move(bytes);
        } else if (bytes != baseline) {
            result.identical = false;
            result.note = "run " + std::to_string(run) + " differs from run 0";
            return result;
        }
    }
    result.note = "all " + std::to_string(n_runs) + " runs byte-identical";
    return result;
}

}  // namespace s121
