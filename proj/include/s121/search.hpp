#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "s121/engine.hpp"

namespace s121 {

/// One row of the prior-exclusion sweep: spouse A fixed at 120/120/120 with no
/// qualifying reason, spouse B at 120/120 with prior = p and a qualifying
/// reason. sum_a is the sum-of-limitations reading; the other three columns
/// are the joint-cap reading under each numerator mode.
struct SweepRow {
    long long p = 0;
    Money sum_a;
    Money min_six;
    Money min_three_joint;
    Money held_b2a;

    bool diverges() const {
        return sum_a != min_six || sum_a != min_three_joint || sum_a != held_b2a;
    }

    bool operator==(const SweepRow&) const = default;
};

/// A fact pattern on which the two readings disagree, with the outcome that
/// proves it. Re-running evaluate on the facts reproduces outcome exactly.
struct DivergenceWitness {
    CoupleFacts facts;
    InterpretationOutcome outcome;

    bool operator==(const DivergenceWitness&) const = default;
};

struct PeriodRange {
    long long lo = 0;
    long long hi = 0;

    bool operator==(const PeriodRange&) const = default;
};

/// Optional domain constraint applied before divergence is checked.
enum class DomainConstraint { none, some_time_test_fails };

/// Finite search box: inclusive integer ranges for the six periods, fixed
/// reason flags, and an optional constraint. Witnesses are produced in
/// lexicographic order (own_a, use_a, prior_a, own_b, use_b, prior_b).
struct SearchDomain {
    PeriodRange own_a;
    PeriodRange use_a;
    PeriodRange prior_a;
    PeriodRange own_b;
    PeriodRange use_b;
    PeriodRange prior_b;
    bool reason_a = false;
    bool reason_b = false;
    DomainConstraint constraint = DomainConstraint::none;

    /// Number of points in the box; 0 when any range is empty.
    std::uint64_t size() const;
};

struct SearchOptions {
    std::size_t limit = SIZE_MAX;
    std::uint64_t safety_bound = 1'000'000;
    bool override_safety_bound = false;
    int threads = 1;
};

/// Sweep spouse B's prior-exclusion period over an inclusive range.
/// Rejects an empty or negative range.
std::vector<SweepRow> sweep_prior_exclusion(long long lo, long long hi,
                                            const StatuteParams& p, int threads = 1);

/// Deterministic bounded enumeration of the domain, returning the first
/// `options.limit` divergent fact patterns in lexicographic order. Boxes over
/// which both readings are provably constant (by monotonicity, from their
/// corner evaluations) are skipped when constant-consistent and filled without
/// re-evaluation when constant-divergent; the result is identical to filtering
/// evaluate over the exhaustive enumeration. Rejects domains larger than
/// options.safety_bound unless options.override_safety_bound is set.
std::vector<DivergenceWitness> bounded_search(const SearchDomain& domain,
                                              const StatuteParams& p,
                                              const SearchOptions& options = {});

/// Which period of which spouse a one-dimensional scan varies.
enum class VariableId { own_a, use_a, prior_a, own_b, use_b, prior_b };

std::string to_string(VariableId id);

/// Scan one variable over an inclusive range with all other facts fixed and
/// return the maximal runs of consecutive divergent values, each as an
/// inclusive [lo, hi] pair. Rejects an empty range.
std::vector<std::pair<long long, long long>> find_inconsistency_zone(
    VariableId vary, long long lo, long long hi, const CoupleFacts& fixed,
    const StatuteParams& p);

/// One cell of the cross-validation grid: both readings under a given time
/// unit and per-period combine rule.
struct GridCell {
    TimeUnit unit = TimeUnit::months;
    CombineRule rule = CombineRule::minimum;
    Money sum_reading;
    Money joint_reading;
    bool converged = false;

    bool operator==(const GridCell&) const = default;
};

/// Exact reduced-cap ratio for a combine rule: each spouse's three periods are
/// capped at the full test length first, the rule is applied per period, and
/// the minimum over the three combined periods is divided by the full test
/// length. The average rule can produce non-integral combined periods, so the
/// result is a rational rather than a PeriodLength.
Rational grid_numerator_ratio(const CoupleFacts& c, const StatuteParams& p,
                              CombineRule rule);

/// Joint-cap reading with the rule-based ratio in place of joint_numerator.
Money grid_joint_reading(const CoupleFacts& c, const StatuteParams& p,
                         CombineRule rule);

/// Evaluate both readings for every (unit, rule) pair. Facts must be supplied
/// per unit; there is no cross-unit conversion. Rows are ordered by unit
/// (days, months, years) then rule (minimum, maximum, average).
std::vector<GridCell> cross_validation_grid(
    const std::map<TimeUnit, CoupleFacts>& facts_by_unit,
    const std::vector<CombineRule>& rules);

}  // namespace s121
