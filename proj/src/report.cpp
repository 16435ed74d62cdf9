#include "s121/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace s121 {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw InputError(message); }

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return item.key() == k; });
        if (!known) fail("unknown key '" + item.key() + "' in " + where);
    }
}

const Json& require_key(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail("missing key '" + std::string(key) + "' in " + where);
    return *it;
}

long long as_nonneg_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        fail(where + " must be an integer");
    long long v = j.get<long long>();
    if (v < 0) fail(where + " must be non-negative");
    return v;
}

bool as_bool(const Json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where + " must be true or false");
    return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where + " must be a string");
    return j.get<std::string>();
}

const Json& require_object(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
    return j;
}

void check_schema_version(const Json& j, const std::string& where) {
    const Json& v = require_key(j, "schema_version", where);
    if (!v.is_number_integer() || v.get<long long>() != 1)
        fail("unsupported schema_version in " + where + " (expected 1)");
}

SpouseTimeline parse_spouse(const Json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown_keys(j, {"ownership", "use", "since_prior_exclusion", "qualifying_reason"},
                        where);
    SpouseTimeline t;
    t.ownership = PeriodLength(as_nonneg_int(require_key(j, "ownership", where),
                                             where + ".ownership"));
    t.use = PeriodLength(as_nonneg_int(require_key(j, "use", where), where + ".use"));
    if (auto it = j.find("since_prior_exclusion"); it != j.end() && !it->is_null())
        t.since_prior_exclusion =
            PeriodLength(as_nonneg_int(*it, where + ".since_prior_exclusion"));
    if (auto it = j.find("qualifying_reason"); it != j.end())
        t.qualifying_reason = as_bool(*it, where + ".qualifying_reason");
    return t;
}

CoupleFacts parse_couple(const Json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown_keys(j, {"spouse_a", "spouse_b"}, where);
    CoupleFacts c;
    c.spouse_a = parse_spouse(require_key(j, "spouse_a", where), where + ".spouse_a");
    c.spouse_b = parse_spouse(require_key(j, "spouse_b", where), where + ".spouse_b");
    return c;
}

void apply_overrides(StatuteParams& params, const Json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown_keys(j, {"base_limit", "joint_limit", "numerator_mode"}, where);
    if (auto it = j.find("base_limit"); it != j.end())
        params.base_limit = Money::dollars(as_nonneg_int(*it, where + ".base_limit"));
    if (auto it = j.find("joint_limit"); it != j.end())
        params.joint_limit = Money::dollars(as_nonneg_int(*it, where + ".joint_limit"));
    if (auto it = j.find("numerator_mode"); it != j.end()) {
        try {
            params.numerator_mode = parse_numerator_mode(as_string(*it, where + ".numerator_mode"));
        } catch (const std::invalid_argument& e) {
            fail(std::string(e.what()) + " in " + where);
        }
    }
}

Json parse_json_or_fail(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(what + " is not valid JSON");
    return j;
}

std::string read_file_or_fail(const std::filesystem::path& file, const std::string& what) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail("cannot read " + what + ": " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TimeUnit parse_unit_or_fail(const std::string& text, const std::string& where) {
    try {
        return parse_time_unit(text);
    } catch (const std::invalid_argument& e) {
        fail(std::string(e.what()) + " in " + where);
    }
}

PeriodRange parse_range(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        fail(where + " must be a two-element [lo, hi] array");
    PeriodRange r;
    r.lo = as_nonneg_int(j[0], where + "[0]");
    r.hi = as_nonneg_int(j[1], where + "[1]");
    if (r.lo > r.hi) fail(where + " is empty (lo > hi)");
    return r;
}

// Rendering helpers.

Json money_json(const Money& m) {
    Json j = Json::object();
    j["dollars"] = m.rounded_dollars_i64();
    j["numerator"] = m.numerator().convert_to<long long>();
    j["denominator"] = m.denominator().convert_to<long long>();
    return j;
}

Json spouse_json(const SpouseTimeline& t) {
    Json j = Json::object();
    j["ownership"] = t.ownership.count();
    j["use"] = t.use.count();
    j["since_prior_exclusion"] =
        t.since_prior_exclusion ? Json(t.since_prior_exclusion->count()) : Json(nullptr);
    j["qualifying_reason"] = t.qualifying_reason;
    return j;
}

Json couple_json(const CoupleFacts& c) {
    Json j = Json::object();
    j["spouse_a"] = spouse_json(c.spouse_a);
    j["spouse_b"] = spouse_json(c.spouse_b);
    return j;
}

std::string finish_json(const Json& j) { return j.dump(2) + "\n"; }

std::string plain_dollars(const Money& m) { return m.rounded_dollars().str(); }

std::string human_dollars(const Money& m) {
    BigInt d = m.rounded_dollars();
    if (d < 0) return "-$" + group_thousands(BigInt(-d));
    return "$" + group_thousands(d);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) widths[i] = headers[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text += "  ";
            text += cells[i];
            if (i + 1 < cells.size())
                text += std::string(widths[i] - cells[i].size(), ' ');
        }
        return text + "\n";
    };

    std::string out = line(headers);
    std::string rule;
    for (std::size_t i = 0; i < headers.size(); ++i) {
        if (i) rule += "  ";
        rule += std::string(widths[i], '-');
    }
    out += rule + "\n";
    for (const auto& row : rows) out += line(row);
    return out;
}

std::string csv_document(const std::string& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string out = header + "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
    if (text == "table") return OutputFormat::table;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    fail("unknown output format: " + text + " (expected table, json, or csv)");
}

FactsDocument parse_facts_document(const std::string& text) {
    Json j = parse_json_or_fail(text, "facts document");
    require_object(j, "facts document");
    reject_unknown_keys(j, {"schema_version", "unit", "spouse_a", "spouse_b", "overrides"},
                        "facts document");
    check_schema_version(j, "facts document");

    FactsDocument doc;
    doc.unit = parse_unit_or_fail(
        as_string(require_key(j, "unit", "facts document"), "unit"), "facts document");
    doc.params = StatuteParams::defaults(doc.unit);
    doc.facts.spouse_a =
        parse_spouse(require_key(j, "spouse_a", "facts document"), "spouse_a");
    doc.facts.spouse_b =
        parse_spouse(require_key(j, "spouse_b", "facts document"), "spouse_b");
    if (auto it = j.find("overrides"); it != j.end())
        apply_overrides(doc.params, *it, "overrides");
    return doc;
}

FactsDocument load_facts_document(const std::filesystem::path& file) {
    return parse_facts_document(read_file_or_fail(file, "facts file"));
}

DomainDocument parse_domain_document(const std::string& text) {
    Json j = parse_json_or_fail(text, "domain document");
    require_object(j, "domain document");
    reject_unknown_keys(j,
                        {"schema_version", "unit", "own_a", "use_a", "prior_a", "own_b",
                         "use_b", "prior_b", "reason_a", "reason_b", "constraint",
                         "overrides"},
                        "domain document");
    check_schema_version(j, "domain document");

    DomainDocument doc;
    doc.unit = parse_unit_or_fail(
        as_string(require_key(j, "unit", "domain document"), "unit"), "domain document");
    doc.params = StatuteParams::defaults(doc.unit);

    doc.domain.own_a = parse_range(require_key(j, "own_a", "domain document"), "own_a");
    doc.domain.use_a = parse_range(require_key(j, "use_a", "domain document"), "use_a");
    doc.domain.prior_a = parse_range(require_key(j, "prior_a", "domain document"), "prior_a");
    doc.domain.own_b = parse_range(require_key(j, "own_b", "domain document"), "own_b");
    doc.domain.use_b = parse_range(require_key(j, "use_b", "domain document"), "use_b");
    doc.domain.prior_b = parse_range(require_key(j, "prior_b", "domain document"), "prior_b");
    if (auto it = j.find("reason_a"); it != j.end())
        doc.domain.reason_a = as_bool(*it, "reason_a");
    if (auto it = j.find("reason_b"); it != j.end())
        doc.domain.reason_b = as_bool(*it, "reason_b");
    if (auto it = j.find("constraint"); it != j.end()) {
        std::string c = as_string(*it, "constraint");
        if (c == "none")
            doc.domain.constraint = DomainConstraint::none;
        else if (c == "some_time_test_fails")
            doc.domain.constraint = DomainConstraint::some_time_test_fails;
        else
            fail("unknown constraint: " + c);
    }
    if (auto it = j.find("overrides"); it != j.end())
        apply_overrides(doc.params, *it, "overrides");
    return doc;
}

DomainDocument load_domain_document(const std::filesystem::path& file) {
    return parse_domain_document(read_file_or_fail(file, "domain file"));
}

GridFactsDocument parse_grid_facts_document(const std::string& text) {
    Json j = parse_json_or_fail(text, "grid facts document");
    require_object(j, "grid facts document");
    reject_unknown_keys(j, {"schema_version", "facts_by_unit"}, "grid facts document");
    check_schema_version(j, "grid facts document");

    const Json& by_unit = require_object(
        require_key(j, "facts_by_unit", "grid facts document"), "facts_by_unit");
    GridFactsDocument doc;
    for (const auto& item : by_unit.items()) {
        TimeUnit unit = parse_unit_or_fail(item.key(), "facts_by_unit");
        doc.facts_by_unit[unit] = parse_couple(item.value(), "facts_by_unit." + item.key());
    }
    if (doc.facts_by_unit.empty()) fail("facts_by_unit has no entries");
    return doc;
}

GridFactsDocument load_grid_facts_document(const std::filesystem::path& file) {
    return parse_grid_facts_document(read_file_or_fail(file, "grid facts file"));
}

std::pair<long long, long long> parse_sweep_range(const std::string& text) {
    std::size_t sep = text.find("..");
    if (sep == std::string::npos) fail("sweep range must look like LO..HI: '" + text + "'");
    auto parse_side = [&](const std::string& side) {
        if (side.empty() || side.find_first_not_of("0123456789") != std::string::npos)
            fail("sweep range bound must be a non-negative integer: '" + side + "'");
        return std::stoll(side);
    };
    long long lo = parse_side(text.substr(0, sep));
    long long hi = parse_side(text.substr(sep + 2));
    if (lo > hi) fail("sweep range is empty: '" + text + "'");
    return {lo, hi};
}

std::string evaluate_report(const FactsDocument& doc, const InterpretationOutcome& outcome,
                            OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            Json j = Json::object();
            j["schema_version"] = 1;
            j["kind"] = "evaluate";
            j["unit"] = to_string(doc.unit);
            j["numerator_mode"] = to_string(doc.params.numerator_mode);
            j["facts"] = couple_json(doc.facts);
            j["sum_reading"] = money_json(outcome.sum_reading);
            j["joint_reading"] = money_json(outcome.joint_reading);
            j["diverges"] = outcome.diverges;
            j["delta"] = money_json(outcome.delta);
            return finish_json(j);
        }
        case OutputFormat::csv:
            return csv_document("sum_reading,joint_reading,diverges,delta",
                                {{plain_dollars(outcome.sum_reading),
                                  plain_dollars(outcome.joint_reading),
                                  true_false(outcome.diverges),
                                  plain_dollars(outcome.delta)}});
        case OutputFormat::table: {
            std::string out = render_fact_pattern(doc.facts) + "\n";
            out += "unit: " + to_string(doc.unit) +
                   ", numerator mode: " + to_string(doc.params.numerator_mode) + "\n\n";
            out += render_table({"reading", "amount"},
                                {{"sum_of_limitations", human_dollars(outcome.sum_reading)},
                                 {"joint_cap", human_dollars(outcome.joint_reading)},
                                 {"delta", human_dollars(outcome.delta)}});
            out += "\n" + std::string(outcome.diverges
                                          ? "readings DIVERGE on these facts"
                                          : "readings agree on these facts") + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable output format");
}

std::string sweep_report(long long lo, long long hi, const std::vector<SweepRow>& rows,
                         const StatuteParams& params, OutputFormat format) {
    bool any = std::any_of(rows.begin(), rows.end(),
                           [](const SweepRow& r) { return r.diverges(); });
    switch (format) {
        case OutputFormat::json: {
            Json j = Json::object();
            j["schema_version"] = 1;
            j["kind"] = "sweep";
            j["unit"] = to_string(params.time_unit);
            j["range"] = Json::object({{"lo", lo}, {"hi", hi}});
            Json rows_json = Json::array();
            for (const SweepRow& r : rows) {
                Json row = Json::object();
                row["p"] = r.p;
                row["sum_a"] = money_json(r.sum_a);
                row["min_six"] = money_json(r.min_six);
                row["min_three_joint"] = money_json(r.min_three_joint);
                row["held_b2A_months"] = money_json(r.held_b2a);
                row["diverges"] = r.diverges();
                rows_json.push_back(std::move(row));
            }
            j["rows"] = std::move(rows_json);
            j["any_divergence"] = any;
            return finish_json(j);
        }
        case OutputFormat::csv: {
            std::vector<std::vector<std::string>> cells;
            for (const SweepRow& r : rows)
                cells.push_back({std::to_string(r.p), plain_dollars(r.sum_a),
                                 plain_dollars(r.min_six), plain_dollars(r.min_three_joint),
                                 plain_dollars(r.held_b2a), true_false(r.diverges())});
            return csv_document("P,SumA,min_six,min_three_joint,held_b2A_months,diverges",
                                cells);
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> cells;
            for (const SweepRow& r : rows)
                cells.push_back({std::to_string(r.p), human_dollars(r.sum_a),
                                 human_dollars(r.min_six), human_dollars(r.min_three_joint),
                                 human_dollars(r.held_b2a), yes_no(r.diverges())});
            std::string out = render_table(
                {"P", "SumA", "min_six", "min_three_joint", "held_b2A_months", "diverges"},
                cells);
            out += "\n" + std::string(any ? "divergence present in range"
                                          : "no divergence in range") + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable output format");
}

std::string search_report(const DomainDocument& doc,
                          const std::vector<DivergenceWitness>& witnesses,
                          OutputFormat format) {
    auto range_json = [](const PeriodRange& r) { return Json::array({r.lo, r.hi}); };
    switch (format) {
        case OutputFormat::json: {
            Json j = Json::object();
            j["schema_version"] = 1;
            j["kind"] = "search";
            j["unit"] = to_string(doc.unit);
            Json d = Json::object();
            d["own_a"] = range_json(doc.domain.own_a);
            d["use_a"] = range_json(doc.domain.use_a);
            d["prior_a"] = range_json(doc.domain.prior_a);
            d["own_b"] = range_json(doc.domain.own_b);
            d["use_b"] = range_json(doc.domain.use_b);
            d["prior_b"] = range_json(doc.domain.prior_b);
            d["reason_a"] = doc.domain.reason_a;
            d["reason_b"] = doc.domain.reason_b;
            d["constraint"] = doc.domain.constraint == DomainConstraint::none
                                  ? "none"
                                  : "some_time_test_fails";
            d["size"] = doc.domain.size();
            j["domain"] = std::move(d);
            j["witness_count"] = witnesses.size();
            Json list = Json::array();
            for (const DivergenceWitness& w : witnesses) {
                Json row = Json::object();
                row["fact_pattern"] = render_fact_pattern(w.facts);
                row["facts"] = couple_json(w.facts);
                row["sum_reading"] = money_json(w.outcome.sum_reading);
                row["joint_reading"] = money_json(w.outcome.joint_reading);
                row["delta"] = money_json(w.outcome.delta);
                list.push_back(std::move(row));
            }
            j["witnesses"] = std::move(list);
            j["any_divergence"] = !witnesses.empty();
            return finish_json(j);
        }
        case OutputFormat::csv: {
            std::vector<std::vector<std::string>> cells;
            auto period = [](const std::optional<PeriodLength>& p) {
                return p ? std::to_string(p->count()) : std::string("never");
            };
            for (const DivergenceWitness& w : witnesses) {
                const SpouseTimeline& a = w.facts.spouse_a;
                const SpouseTimeline& b = w.facts.spouse_b;
                cells.push_back({std::to_string(a.ownership.count()),
                                 std::to_string(a.use.count()),
                                 period(a.since_prior_exclusion),
                                 true_false(a.qualifying_reason),
                                 std::to_string(b.ownership.count()),
                                 std::to_string(b.use.count()),
                                 period(b.since_prior_exclusion),
                                 true_false(b.qualifying_reason),
                                 plain_dollars(w.outcome.sum_reading),
                                 plain_dollars(w.outcome.joint_reading),
                                 plain_dollars(w.outcome.delta)});
            }
            return csv_document(
                "own_a,use_a,prior_a,reason_a,own_b,use_b,prior_b,reason_b,"
                "sum_reading,joint_reading,delta",
                cells);
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> cells;
            for (const DivergenceWitness& w : witnesses)
                cells.push_back({render_fact_pattern(w.facts),
                                 human_dollars(w.outcome.sum_reading),
                                 human_dollars(w.outcome.joint_reading),
                                 human_dollars(w.outcome.delta)});
            std::string out = render_table({"fact pattern", "sum", "joint", "delta"}, cells);
            out += "\n" + std::to_string(witnesses.size()) + " divergent fact pattern(s) in a domain of " +
                   std::to_string(doc.domain.size()) + " point(s)\n";
            return out;
        }
    }
    throw std::logic_error("unreachable output format");
}

std::string grid_report(const std::vector<GridCell>& cells, OutputFormat format) {
    bool all = std::all_of(cells.begin(), cells.end(),
                           [](const GridCell& c) { return c.converged; });
    switch (format) {
        case OutputFormat::json: {
            Json j = Json::object();
            j["schema_version"] = 1;
            j["kind"] = "grid";
            Json list = Json::array();
            for (const GridCell& c : cells) {
                Json row = Json::object();
                row["unit"] = to_string(c.unit);
                row["rule"] = to_string(c.rule);
                row["sum_reading"] = money_json(c.sum_reading);
                row["joint_reading"] = money_json(c.joint_reading);
                row["converged"] = c.converged;
                list.push_back(std::move(row));
            }
            j["cells"] = std::move(list);
            j["all_converged"] = all;
            return finish_json(j);
        }
        case OutputFormat::csv: {
            std::vector<std::vector<std::string>> rows;
            for (const GridCell& c : cells)
                rows.push_back({to_string(c.unit), to_string(c.rule),
                                plain_dollars(c.sum_reading), plain_dollars(c.joint_reading),
                                true_false(c.converged)});
            return csv_document("unit,rule,sum_reading,joint_reading,converged", rows);
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> rows;
            for (const GridCell& c : cells)
                rows.push_back({to_string(c.unit), to_string(c.rule),
                                human_dollars(c.sum_reading), human_dollars(c.joint_reading),
                                yes_no(c.converged)});
            std::string out = render_table({"unit", "rule", "sum", "joint", "converged"}, rows);
            out += "\n" + std::string(all ? "all cells converged"
                                          : "divergence present in grid") + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable output format");
}

std::string validate_report(const std::vector<RunnerReport>& runners,
                            const std::optional<DeterminismReport>& determinism,
                            OutputFormat format) {
    bool overall = std::all_of(runners.begin(), runners.end(),
                               [](const RunnerReport& r) { return r.overall_pass();}) &&
                   (!determinism || determinism->identical);
    switch (format) {
        case OutputFormat::json: {
            Json j = Json::object();
            j["schema_version"] = 1;
            j["kind"] = "validate";
            Json list = Json::array();
            for (const RunnerReport& r : runners) {
                Json rj = Json::object();
                rj["name"] = r.runner_name;
                rj["overall"] = r.overall_pass() ? "pass" : "fail";
                Json cases = Json::array();
                for (const CaseResult& c : r.cases) {
                    Json cj = Json::object();
                    cj["label"] = c.label;
                    cj["inputs"] = c.inputs;
                    cj["expected_sum"] = c.expected_sum ? Json(*c.expected_sum) : Json(nullptr);
                    cj["expected_joint"] =
                        c.expected_joint ? Json(*c.expected_joint) : Json(nullptr);
                    cj["expected_diverges"] =
                        c.expected_diverges ? Json(*c.expected_diverges) : Json(nullptr);
                    cj["actual_sum"] = c.actual ? money_json(c.actual->sum_reading) : Json(nullptr);
                    cj["actual_joint"] =
                        c.actual ? money_json(c.actual->joint_reading) : Json(nullptr);
                    cj["actual_diverges"] = c.actual ? Json(c.actual->diverges) : Json(nullptr);
                    cj["note"] = c.note;
                    cj["pass"] = c.passed;
                    cases.push_back(std::move(cj));
                }
                rj["cases"] = std::move(cases);
                list.push_back(std::move(rj));
            }
            j["runners"] = std::move(list);
            if (determinism) {
                Json dj = Json::object();
                dj["runs"] = determinism->runs;
                dj["identical"] = determinism->identical;
                dj["note"] = determinism->note;
                j["determinism"] = std::move(dj);
            } else {
                j["determinism"] = nullptr;
            }
            j["overall"] = overall ? "pass" : "fail";
            return finish_json(j);
        }
        case OutputFormat::csv: {
            std::vector<std::vector<std::string>> rows;
            for (const RunnerReport& r : runners) {
                for (const CaseResult& c : r.cases) {
                    auto opt_int = [](const std::optional<long long>& v) {
                        return v ? std::to_string(*v) : std::string();
                    };
                    auto opt_bool = [](const std::optional<bool>& v) {
                        return v ? std::string(*v ? "true" : "false") : std::string();
                    };
                    rows.push_back({r.runner_name, c.label, opt_int(c.expected_sum),
                                    opt_int(c.expected_joint), opt_bool(c.expected_diverges),
                                    c.actual ? plain_dollars(c.actual->sum_reading) : "",
                                    c.actual ? plain_dollars(c.actual->joint_reading) : "",
                                    c.actual ? true_false(c.actual->diverges) : "",
                                    true_false(c.passed)});
                }
            }
            if (determinism)
                rows.push_back({"determinism_check",
                                "runs=" + std::to_string(determinism->runs), "", "", "", "",
                                "", "", true_false(determinism->identical)});
            return csv_document(
                "runner,case,expected_sum,expected_joint,expected_diverges,"
                "actual_sum,actual_joint,actual_diverges,pass",
                rows);
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> rows;
            for (const RunnerReport& r : runners)
                rows.push_back({r.runner_name, std::to_string(r.cases.size()),
                                r.overall_pass() ? "pass" : "fail"});
            std::string out = render_table({"runner", "cases", "result"}, rows);
            std::string failures;
            for (const RunnerReport& r : runners)
                for (const CaseResult& c : r.cases)
                    if (!c.passed)
                        failures += "  " + r.runner_name + " / " + c.label +
                                    (c.note.empty() ? "" : ": " + c.note) + "\n";
            if (!failures.empty()) out += "\nfailing cases:\n" + failures;
            out += "\ndeterminism: ";
            if (determinism)
                out += (determinism->identical ? "identical across " : "MISMATCH across ") +
                       std::to_string(determinism->runs) + " runs\n";
            else
                out += "skipped (needs --runs 2 or more)\n";
            out += std::string("overall: ") + (overall ? "pass" : "fail") + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable output format");
}

int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        FactsDocument doc = load_facts_document(cmd.facts_file);
        if (cmd.mode) doc.params.numerator_mode = *cmd.mode;
        InterpretationOutcome outcome = evaluate(doc.facts, doc.params);
        out << evaluate_report(doc, outcome, cmd.format);
        return outcome.diverges ? 1 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        auto [lo, hi] = parse_sweep_range(cmd.range);
        StatuteParams params = StatuteParams::defaults(TimeUnit::months);
        std::vector<SweepRow> rows = sweep_prior_exclusion(lo, hi, params, cmd.threads);
        out << sweep_report(lo, hi, rows, params, cmd.format);
        bool any = std::any_of(rows.begin(), rows.end(),
                               [](const SweepRow& r) { return r.diverges(); });
        return any ? 1 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        DomainDocument doc = load_domain_document(cmd.domain_file);
        SearchOptions options;
        options.limit = cmd.limit;
        options.override_safety_bound = cmd.override_domain_bound;
        options.threads = cmd.threads;
        std::vector<DivergenceWitness> witnesses = bounded_search(doc.domain, doc.params, options);
        out << search_report(doc, witnesses, cmd.format);
        return witnesses.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_grid(const GridCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        GridFactsDocument doc = load_grid_facts_document(cmd.facts_file);

        std::map<TimeUnit, CoupleFacts> selected;
        if (cmd.units.empty()) {
            selected = doc.facts_by_unit;
        } else {
            for (const std::string& name : cmd.units) {
                TimeUnit unit = parse_unit_or_fail(name, "--unit");
                auto it = doc.facts_by_unit.find(unit);
                if (it == doc.facts_by_unit.end())
                    fail("grid facts file has no fact set for unit '" + name + "'");
                selected[unit] = it->second;
            }
        }

        std::vector<CombineRule> rules;
        if (cmd.rules.empty()) {
            rules = {CombineRule::minimum, CombineRule::maximum, CombineRule::average};
        } else {
            for (const std::string& name : cmd.rules) {
                try {
                    rules.push_back(parse_combine_rule(name));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
            }
        }

        std::vector<GridCell> cells = cross_validation_grid(selected, rules);
        out << grid_report(cells, cmd.format);
        bool all = std::all_of(cells.begin(), cells.end(),
                               [](const GridCell& c) { return c.converged; });
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_validate(const ValidateCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        if (cmd.runs < 1) fail("--runs must be at least 1");
        ValidationContext ctx;
        ctx.fixtures_dir = cmd.fixtures_dir;
        ctx.threads = cmd.threads;

        std::vector<RunnerReport> runners;
        runners.push_back(run_case_no_inconsistency(ctx));
        runners.push_back(run_case_with_inconsistency(ctx));
        runners.push_back(run_all_validation_tests(ctx));
        runners.push_back(run_joint_prior_table(ctx).report);

        std::optional<DeterminismReport> determinism;
        if (cmd.runs >= 2) determinism = determinism_check(cmd.runs, ctx);

        out << validate_report(runners, determinism, cmd.format);
        bool ok = std::all_of(runners.begin(), runners.end(),
                              [](const RunnerReport& r) { return r.overall_pass(); }) &&
                  (!determinism || determinism->identical);
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace s121
