#pragma once

// Randomized invariant checks shared by the property test binary and the
// acceptance suite. Every check is seeded and deterministic, samples the
// requested number of fact patterns, and reports a violation count that must
// be zero.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "s121/search.hpp"
#include "s121/validation.hpp"

namespace s121::proptest {

struct PropertyResult {
    std::string name;
    long long samples = 0;
    long long violations = 0;
    std::string first_failure;

    bool passed() const { return samples > 0 && violations == 0; }
};

namespace detail {

inline TimeUnit pick_unit(std::mt19937& rng, const std::optional<TimeUnit>& only) {
    if (only) return *only;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return TimeUnit::days;
        case 1: return TimeUnit::months;
        default: return TimeUnit::years;
    }
}

inline long long random_period(std::mt19937& rng, long long hi) {
    return std::uniform_int_distribution<long long>(0, hi)(rng);
}

inline SpouseTimeline random_spouse(std::mt19937& rng, long long t) {
    long long hi = t + t / 2 + 1;
    SpouseTimeline s;
    s.ownership = PeriodLength(random_period(rng, hi));
    s.use = PeriodLength(random_period(rng, hi));
    if (std::uniform_int_distribution<int>(0, 4)(rng) != 0)
        s.since_prior_exclusion = PeriodLength(random_period(rng, hi));
    s.qualifying_reason = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    return s;
}

inline CoupleFacts random_couple(std::mt19937& rng, long long t) {
    return {random_spouse(rng, t), random_spouse(rng, t)};
}

inline NumeratorMode pick_mode(std::mt19937& rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return NumeratorMode::min_six;
        case 1: return NumeratorMode::min_three_joint;
        default: return NumeratorMode::held_b2a_months;
    }
}

inline void record(PropertyResult& r, bool ok, const CoupleFacts& facts,
                   const std::string& detail) {
    ++r.samples;
    if (ok) return;
    ++r.violations;
    if (r.first_failure.empty())
        r.first_failure = render_fact_pattern(facts) + " (" + detail + ")";
}

}  // namespace detail

/// evaluate is invariant under swapping the spouses, in every numerator mode.
inline PropertyResult check_spouse_swap_symmetry(std::uint32_t seed, long long n,
                                                 std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "spouse_swap_symmetry";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        p.numerator_mode = detail::pick_mode(rng);
        CoupleFacts c = detail::random_couple(rng, p.full_test_length.count());
        bool ok = evaluate(c, p) == evaluate(swap_spouses(c), p);
        detail::record(r, ok, c, "swap changed the outcome, mode " + to_string(p.numerator_mode));
    }
    return r;
}

/// Both readings are monotone nondecreasing in every period of either spouse.
inline PropertyResult check_monotonicity(std::uint32_t seed, long long n,
                                         std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "monotonicity";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        p.numerator_mode = detail::pick_mode(rng);
        long long t = p.full_test_length.count();
        CoupleFacts before = detail::random_couple(rng, t);

        CoupleFacts after = before;
        SpouseTimeline& s = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                ? after.spouse_a
                                : after.spouse_b;
        long long bump = std::uniform_int_distribution<long long>(1, t)(rng);
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: s.ownership = PeriodLength(s.ownership.count() + bump); break;
            case 1: s.use = PeriodLength(s.use.count() + bump); break;
            default:
                s.since_prior_exclusion =
                    PeriodLength(s.since_prior_exclusion
                                     ? s.since_prior_exclusion->count() + bump
                                     : t + bump);
                break;
        }
        // Raising an absent prior means moving from "never" to a value above
        // the full test length, which keeps the prior test satisfied.
        InterpretationOutcome lo = evaluate(before, p);
        InterpretationOutcome hi = evaluate(after, p);
        bool ok = hi.sum_reading >= lo.sum_reading && hi.joint_reading >= lo.joint_reading;
        detail::record(r, ok, before, "reading decreased, mode " + to_string(p.numerator_mode));
    }
    return r;
}

/// proration_ratio always lands in [0, 1].
inline PropertyResult check_ratio_bounds(std::uint32_t seed, long long n,
                                         std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "proration_ratio_bounds";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        CoupleFacts c = detail::random_couple(rng, p.full_test_length.count());
        Rational ratio = proration_ratio(c.spouse_a, p);
        bool ok = ratio >= 0 && ratio <= 1;
        detail::record(r, ok, c, "ratio out of [0,1]");
    }
    return r;
}

/// A spouse who never claimed the exclusion is indistinguishable from one
/// whose prior-exclusion period equals the full test length.
inline PropertyResult check_never_equals_full(std::uint32_t seed, long long n,
                                              std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "never_equals_full_test_length";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        p.numerator_mode = detail::pick_mode(rng);
        CoupleFacts with_never = detail::random_couple(rng, p.full_test_length.count());
        with_never.spouse_a.since_prior_exclusion.reset();
        CoupleFacts with_full = with_never;
        with_full.spouse_a.since_prior_exclusion = p.full_test_length;
        bool ok = evaluate(with_never, p) == evaluate(with_full, p);
        detail::record(r, ok, with_never, "never != full test length");
    }
    return r;
}

/// The six-way minimum numerator never exceeds the three-way joint one.
inline PropertyResult check_numerator_ordering(std::uint32_t seed, long long n,
                                               std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "numerator_ordering";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        CoupleFacts c = detail::random_couple(rng, p.full_test_length.count());
        StatuteParams six = p, three = p;
        six.numerator_mode = NumeratorMode::min_six;
        three.numerator_mode = NumeratorMode::min_three_joint;
        bool ok = joint_numerator(c, six) <= joint_numerator(c, three);
        detail::record(r, ok, c, "min_six exceeded min_three_joint");
    }
    return r;
}

/// Under default parameters both readings stay within [0, joint_limit].
inline PropertyResult check_readings_bounded(std::uint32_t seed, long long n,
                                             std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "readings_bounded";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        p.numerator_mode = detail::pick_mode(rng);
        CoupleFacts c = detail::random_couple(rng, p.full_test_length.count());
        InterpretationOutcome o = evaluate(c, p);
        Money zero = Money::dollars(0);
        bool ok = o.sum_reading >= zero && o.sum_reading <= p.joint_limit &&
                  o.joint_reading >= zero && o.joint_reading <= p.joint_limit;
        detail::record(r, ok, c, "reading outside [0, joint_limit]");
    }
    return r;
}

/// Restricted average-rule convergence: when each spouse's three capped
/// periods are equal and failing spouses carry a qualifying reason, the
/// average combine rule makes the two readings agree exactly.
inline PropertyResult check_uniform_average_convergence(std::uint32_t seed, long long n,
                                                        std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "uniform_spouse_average_convergence";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        long long t = p.full_test_length.count();
        long long a = detail::random_period(rng, t + t / 2 + 1);
        long long b = detail::random_period(rng, t + t / 2 + 1);
        CoupleFacts c;
        c.spouse_a = {PeriodLength(a), PeriodLength(a), PeriodLength(a), true};
        c.spouse_b = {PeriodLength(b), PeriodLength(b), PeriodLength(b), true};
        bool ok = grid_joint_reading(c, p, CombineRule::average) == sum_of_limitations(c, p);
        detail::record(r, ok, c, "average rule failed to converge");
    }
    return r;
}

/// Capping regression: the grid caps each spouse's periods before combining,
/// so a period far above the full test length behaves exactly like one at it.
inline PropertyResult check_grid_caps_before_combining(std::uint32_t seed, long long n,
                                                       std::optional<TimeUnit> unit = {}) {
    PropertyResult r;
    r.name = "grid_caps_before_combining";
    std::mt19937 rng(seed);
    for (long long i = 0; i < n; ++i) {
        StatuteParams p = StatuteParams::defaults(detail::pick_unit(rng, unit));
        long long t = p.full_test_length.count();
        CoupleFacts inflated = detail::random_couple(rng, t);
        inflated.spouse_a.ownership = PeriodLength(t * 5);
        CoupleFacts capped = inflated;
        capped.spouse_a.ownership = PeriodLength(t);
        CombineRule rule = static_cast<CombineRule>(std::uniform_int_distribution<int>(0, 2)(rng));
        bool ok = grid_numerator_ratio(inflated, p, rule) == grid_numerator_ratio(capped, p, rule) &&
                  grid_numerator_ratio(inflated, p, rule) <= 1;
        detail::record(r, ok, inflated, "inflated period changed the capped ratio");
    }
    return r;
}

/// No intermediate rounding: the 23-period scenario's internal values are the
/// exact rationals 5875000/12 and 5750000/12 dollars before serialization.
inline PropertyResult check_exact_internals() {
    PropertyResult r;
    r.name = "exact_internal_values";
    StatuteParams p = StatuteParams::defaults(TimeUnit::months);
    CoupleFacts c;
    c.spouse_a = {PeriodLength(120), PeriodLength(120), PeriodLength(120), false};
    c.spouse_b = {PeriodLength(120), PeriodLength(120), PeriodLength(23), true};
    InterpretationOutcome o = evaluate(c, p);
    bool ok = o.sum_reading.value() == Rational(5875000, 12) &&
              o.joint_reading.value() == Rational(5750000, 12) && o.diverges;
    detail::record(r, ok, c, "internal exact values drifted");
    return r;
}

inline std::vector<PropertyResult> run_all_properties(std::uint32_t seed, long long n,
                                                      std::optional<TimeUnit> unit = {}) {
    return {check_spouse_swap_symmetry(seed, n, unit),
            check_monotonicity(seed + 1, n, unit),
            check_ratio_bounds(seed + 2, n, unit),
            check_never_equals_full(seed + 3, n, unit),
            check_numerator_ordering(seed + 4, n, unit),
            check_readings_bounded(seed + 5, n, unit),
            check_uniform_average_convergence(seed + 6, n, unit),
            check_grid_caps_before_combining(seed + 7, n, unit),
            check_exact_internals()};
}

}  // namespace s121::proptest
