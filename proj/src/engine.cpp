#include "s121/engine.hpp"

namespace s121 {

namespace {

bool passes_all_three(const SpouseTimeline& t, const StatuteParams& p) {
    return meets_time_test(t.ownership, p) && meets_time_test(t.use, p) &&
           meets_time_test(prior_or_full(t, p), p);
}

bool either_meets_ownership(const CoupleFacts& c, const StatuteParams& p) {
    return meets_time_test(c.spouse_a.ownership, p) ||
           meets_time_test(c.spouse_b.ownership, p);
}

}  // namespace

Money individual_limitation(const SpouseTimeline& t, const StatuteParams& p) {
    if (meets_time_test(shortest_of_three(t, p), p)) return p.base_limit;
    if (t.qualifying_reason) return p.base_limit * proration_ratio(t, p);
    return Money::dollars(0);
}

Money sum_of_limitations(const CoupleFacts& c, const StatuteParams& p) {
    return individual_limitation(c.spouse_a, p) + individual_limitation(c.spouse_b, p);
}

bool couple_fully_qualifies(const CoupleFacts& c, const StatuteParams& p) {
    return passes_all_three(c.spouse_a, p) && passes_all_three(c.spouse_b, p);
}

bool either_spouse_has_reason(const CoupleFacts& c) {
    return c.spouse_a.qualifying_reason || c.spouse_b.qualifying_reason;
}

PeriodLength joint_numerator(const CoupleFacts& c, const StatuteParams& p) {
    const SpouseTimeline& a = c.spouse_a;
    const SpouseTimeline& b = c.spouse_b;
    PeriodLength prior_a = prior_or_full(a, p);
    PeriodLength prior_b = prior_or_full(b, p);

    PeriodLength combined;
    switch (p.numerator_mode) {
        case NumeratorMode::min_six:
            combined = min(min(min(a.ownership, b.ownership), min(a.use, b.use)),
                           min(prior_a, prior_b));
            break;
        case NumeratorMode::min_three_joint:
            combined = min(min(max(a.ownership, b.ownership), min(a.use, b.use)),
                           min(prior_a, prior_b));
            break;
        case NumeratorMode::held_b2a_months:
            if (!either_meets_ownership(c, p)) return PeriodLength(0);
            combined = min(min(a.use, b.use), min(prior_a, prior_b));
            break;
    }
    return min(combined, p.full_test_length);
}

Money joint_cap_exclusion(const CoupleFacts& c, const StatuteParams& p) {
    if (couple_fully_qualifies(c, p)) return p.joint_limit;
    if (either_spouse_has_reason(c)) {
        Rational ratio(joint_numerator(c, p).count(), p.full_test_length.count());
        return p.joint_limit * ratio;
    }
    return Money::dollars(0);
}

InterpretationOutcome evaluate(const CoupleFacts& c, const StatuteParams& p) {
    InterpretationOutcome outcome;
    outcome.sum_reading = sum_of_limitations(c, p);
    outcome.joint_reading = joint_cap_exclusion(c, p);
    outcome.delta = outcome.sum_reading - outcome.joint_reading;
    outcome.diverges = outcome.sum_reading != outcome.joint_reading;
    return outcome;
}

Money apply_gain_cap(const Money& limit, const Money& gain) {
    if (gain < Money::dollars(0)) throw std::invalid_argument("gain must be non-negative");
    return min(limit, gain);
}

}  // namespace s121
