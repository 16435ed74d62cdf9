#include "s121/statute.hpp"

#include <algorithm>

namespace s121 {

std::string to_string(TimeUnit unit) {
    switch (unit) {
        case TimeUnit::days: return "days";
        case TimeUnit::months: return "months";
        case TimeUnit::years: return "years";
    }
    throw std::logic_error("unreachable time unit");
}

TimeUnit parse_time_unit(const std::string& text) {
    if (text == "days") return TimeUnit::days;
    if (text == "months") return TimeUnit::months;
    if (text == "years") return TimeUnit::years;
    throw std::invalid_argument("unknown time unit: " + text);
}

std::string to_string(NumeratorMode mode) {
    switch (mode) {
        case NumeratorMode::min_six: return "min_six";
        case NumeratorMode::min_three_joint: return "min_three_joint";
        case NumeratorMode::held_b2a_months: return "held_b2A_months";
    }
    throw std::logic_error("unreachable numerator mode");
}

NumeratorMode parse_numerator_mode(const std::string& text) {
    if (text == "min_six") return NumeratorMode::min_six;
    if (text == "min_three_joint") return NumeratorMode::min_three_joint;
    if (text == "held_b2A_months") return NumeratorMode::held_b2a_months;
    throw std::invalid_argument("unknown numerator mode: " + text);
}

std::string to_string(CombineRule rule) {
    switch (rule) {
        case CombineRule::minimum: return "minimum";
        case CombineRule::maximum: return "maximum";
        case CombineRule::average: return "average";
    }
    throw std::logic_error("unreachable combine rule");
}

CombineRule parse_combine_rule(const std::string& text) {
    if (text == "minimum") return CombineRule::minimum;
    if (text == "maximum") return CombineRule::maximum;
    if (text == "average") return CombineRule::average;
    throw std::invalid_argument("unknown combine rule: " + text);
}

PeriodLength full_test_length_for(TimeUnit unit) {
    switch (unit) {
        case TimeUnit::days: return PeriodLength(730);
        case TimeUnit::months: return PeriodLength(24);
        case TimeUnit::years: return PeriodLength(2);
    }
    throw std::logic_error("unreachable time unit");
}

StatuteParams StatuteParams::defaults(TimeUnit unit) {
    StatuteParams p;
    p.time_unit = unit;
    p.full_test_length = full_test_length_for(unit);
    return p;
}

PeriodLength prior_or_full(const SpouseTimeline& t, const StatuteParams& p) {
    return t.since_prior_exclusion.value_or(p.full_test_length);
}

PeriodLength shortest_of_three(const SpouseTimeline& t, const StatuteParams& p) {
    return min(min(t.ownership, t.use), prior_or_full(t, p));
}

bool meets_time_test(PeriodLength period, const StatuteParams& p) {
    return period >= p.full_test_length;
}

Rational proration_ratio(const SpouseTimeline& t, const StatuteParams& p) {
    PeriodLength shortest = min(shortest_of_three(t, p), p.full_test_length);
    return Rational(shortest.count(), p.full_test_length.count());
}

std::string group_thousands(const BigInt& whole) {
    std::string digits = whole.str();
    std::string sign;
    if (!digits.empty() && digits.front() == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    std::string grouped;
    int until_comma = static_cast<int>(digits.size() % 3);
    if (until_comma == 0) until_comma = 3;
    for (char d : digits) {
        if (until_comma == 0) {
            grouped.push_back(',');
            until_comma = 3;
        }
        grouped.push_back(d);
        --until_comma;
    }
    return sign + grouped;
}

}  // namespace s121
