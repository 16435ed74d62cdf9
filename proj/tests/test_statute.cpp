#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "s121/statute.hpp"

using namespace s121;

namespace {

SpouseTimeline spouse(long long own, long long use, std::optional<long long> prior,
                      bool reason = false) {
    SpouseTimeline t;
    t.ownership = PeriodLength(own);
    t.use = PeriodLength(use);
    if (prior) t.since_prior_exclusion = PeriodLength(*prior);
    t.qualifying_reason = reason;
    return t;
}

}  // namespace

TEST_CASE("period lengths must be non-negative") {
    CHECK_THROWS_AS(PeriodLength(-1), std::invalid_argument);
    CHECK(PeriodLength(0).count() == 0);
    CHECK(PeriodLength().count() == 0);
}

TEST_CASE("default parameters per time unit") {
    StatuteParams days = StatuteParams::defaults(TimeUnit::days);
    StatuteParams months = StatuteParams::defaults(TimeUnit::months);
    StatuteParams years = StatuteParams::defaults(TimeUnit::years);

    CHECK(days.full_test_length.count() == 730);
    CHECK(months.full_test_length.count() == 24);
    CHECK(years.full_test_length.count() == 2);

    for (const StatuteParams& p : {days, months, years}) {
        CHECK(p.base_limit == Money::dollars(250000));
        CHECK(p.joint_limit == Money::dollars(500000));
        CHECK(p.numerator_mode == NumeratorMode::min_six);
        CHECK_FALSE(p.combine_rule.has_value());
    }
}

TEST_CASE("shortest_of_three uses the binding constraint") {
    StatuteParams p = StatuteParams::defaults(TimeUnit::months);

    // Never claimed counts exactly as the full test length.
    CHECK(shortest_of_three(spouse(30, 30, std::nullopt), p) == PeriodLength(24));
    CHECK(shortest_of_three(spouse(12, 12, std::nullopt), p) == PeriodLength(12));
    CHECK(shortest_of_three(spouse(10, 20, 5), p) == PeriodLength(5));
    CHECK(shortest_of_three(spouse(20, 10, 30), p) == PeriodLength(10));
    CHECK(shortest_of_three(spouse(0, 99, std::nullopt), p) == PeriodLength(0));
}

TEST_CASE("time test boundary is exactly the full test length") {
    StatuteParams p = StatuteParams::defaults(TimeUnit::months);
    CHECK_FALSE(meets_time_test(PeriodLength(23), p));
    CHECK(meets_time_test(PeriodLength(24), p));
    CHECK(meets_time_test(PeriodLength(25), p));

    StatuteParams d = StatuteParams::defaults(TimeUnit::days);
    CHECK_FALSE(meets_time_test(PeriodLength(729), d));
    CHECK(meets_time_test(PeriodLength(730), d));
}

TEST_CASE("proration ratio is exact and capped at one") {
    StatuteParams p = StatuteParams::defaults(TimeUnit::months);
    CHECK(proration_ratio(spouse(12, 12, std::nullopt), p) == Rational(1, 2));
    CHECK(proration_ratio(spouse(30, 30, std::nullopt), p) == Rational(1));
    CHECK(proration_ratio(spouse(0, 10, std::nullopt), p) == Rational(0));
    CHECK(proration_ratio(spouse(120, 120, 23), p) == Rational(23, 24));

    StatuteParams y = StatuteParams::defaults(TimeUnit::years);
    CHECK(proration_ratio(spouse(1, 1, std::nullopt), y) == Rational(1, 2));
}

TEST_CASE("unit and mode names round-trip") {
    for (TimeUnit u : {TimeUnit::days, TimeUnit::months, TimeUnit::years})
        CHECK(parse_time_unit(to_string(u)) == u);
    for (NumeratorMode m : {NumeratorMode::min_six, NumeratorMode::min_three_joint,
                            NumeratorMode::held_b2a_months})
        CHECK(parse_numerator_mode(to_string(m)) == m);
    for (CombineRule r : {CombineRule::minimum, CombineRule::maximum, CombineRule::average})
        CHECK(parse_combine_rule(to_string(r)) == r);

    CHECK_THROWS_AS(parse_time_unit("weeks"), std::invalid_argument);
    CHECK_THROWS_AS(parse_numerator_mode("min_seven"), std::invalid_argument);
    CHECK_THROWS_AS(parse_combine_rule("median"), std::invalid_argument);
}
