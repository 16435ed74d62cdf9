#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "s121/report.hpp"

namespace {

constexpr const char* kDescription =
    "Deterministic rule engine for the home-sale exclusion's two readings of\n"
    "\"whichever is applicable\": evaluate both on identical facts, sweep the\n"
    "prior-exclusion axis, search fact domains for divergence, cross-validate\n"
    "across time units and combine rules, and run the golden validation suite.";

s121::OutputFormat format_of(const std::string& name) {
    return s121::parse_output_format(name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{kDescription, "s121"};
    app.require_subcommand(1);
    // Global options may appear before or after the subcommand.
    app.fallthrough();

    std::string format = "table";
    int threads = 1;
    app.add_option("--format", format, "Output format: table, json, or csv")
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads; never changes output bytes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* eval = app.add_subcommand("evaluate", "Evaluate both readings on a facts file");
    std::string eval_facts;
    std::string eval_mode;
    eval->add_option("facts", eval_facts, "Facts JSON file")->required();
    eval->add_option("--mode", eval_mode,
                     "Numerator mode override: min_six, min_three_joint, held_b2A_months");

    auto* sweep = app.add_subcommand("sweep", "Sweep spouse B's prior-exclusion period");
    std::string sweep_range;
    sweep->add_option("range", sweep_range, "Inclusive range, e.g. 1..36")->required();

    auto* search = app.add_subcommand("search", "Search a fact domain for divergence");
    std::string domain_file;
    std::size_t limit = SIZE_MAX;
    bool override_bound = false;
    search->add_option("domain", domain_file, "Domain JSON file")->required();
    search->add_option("--limit", limit, "Stop after this many witnesses");
    search->add_flag("--override-domain-bound", override_bound,
                     "Search domains larger than the safety bound");

    auto* grid = app.add_subcommand("grid", "Cross-validate across units and combine rules");
    std::string grid_facts;
    std::vector<std::string> grid_units;
    std::vector<std::string> grid_rules;
    grid->add_option("facts", grid_facts, "Facts-by-unit JSON file")->required();
    grid->add_option("--unit", grid_units, "Restrict to a unit (repeatable)");
    grid->add_option("--rule", grid_rules, "Restrict to a combine rule (repeatable)");

    auto* validate = app.add_subcommand("validate", "Run the golden validation suite");
    int runs = 2;
    std::string fixtures_dir = "fixtures";
    validate->add_option("--runs", runs, "Determinism re-runs; 1 skips the check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    validate->add_option("--fixtures", fixtures_dir, "Golden fixture directory")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            s121::EvaluateCommand cmd;
            cmd.facts_file = eval_facts;
            cmd.format = format_of(format);
            if (!eval_mode.empty()) cmd.mode = s121::parse_numerator_mode(eval_mode);
            return s121::cmd_evaluate(cmd, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            s121::SweepCommand cmd;
            cmd.range = sweep_range;
            cmd.format = format_of(format);
            cmd.threads = threads;
            return s121::cmd_sweep(cmd, std::cout, std::cerr);
        }
        if (search->parsed()) {
            s121::SearchCommand cmd;
            cmd.domain_file = domain_file;
            cmd.format = format_of(format);
            cmd.limit = limit;
            cmd.override_domain_bound = override_bound;
            cmd.threads = threads;
            return s121::cmd_search(cmd, std::cout, std::cerr);
        }
        if (grid->parsed()) {
            s121::GridCommand cmd;
            cmd.facts_file = grid_facts;
            cmd.format = format_of(format);
            cmd.units = grid_units;
            cmd.rules = grid_rules;
            return s121::cmd_grid(cmd, std::cout, std::cerr);
        }
        if (validate->parsed()) {
            s121::ValidateCommand cmd;
            cmd.format = format_of(format);
            cmd.runs = runs;
            cmd.fixtures_dir = fixtures_dir;
            cmd.threads = threads;
            return s121::cmd_validate(cmd, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
