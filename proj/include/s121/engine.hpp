#pragma once

#include "s121/statute.hpp"

namespace s121 {

/// Both readings of the limitation language evaluated on the same facts.
/// delta = sum_reading - joint_reading and may be negative. diverges is an
/// exact comparison; rounding never enters it.
struct InterpretationOutcome {
    Money sum_reading;
    Money joint_reading;
    bool diverges = false;
    Money delta;

    bool operator==(const InterpretationOutcome&) const = default;
};

/// One spouse's dollar limitation: the base limit if the time tests pass,
/// a prorated base limit if they fail for a qualifying reason, otherwise zero.
Money individual_limitation(const SpouseTimeline& t, const StatuteParams& p);

/// Reading 1: each spouse's limitation computed separately, then added.
Money sum_of_limitations(const CoupleFacts& c, const StatuteParams& p);

/// True when each spouse passes ownership, use, and prior-exclusion tests.
/// One spouse's history never covers the other's; the three conditions stay
/// distinct per taxpayer.
bool couple_fully_qualifies(const CoupleFacts& c, const StatuteParams& p);

bool either_spouse_has_reason(const CoupleFacts& c);

/// Numerator for the reduced joint cap under the selected mode, capped at the
/// full test length. Absent prior-exclusion periods count as the full test
/// length throughout.
PeriodLength joint_numerator(const CoupleFacts& c, const StatuteParams& p);

/// Reading 2: the joint limit, reduced by joint_numerator / full_test_length
/// when the couple does not fully qualify but at least one spouse has a
/// qualifying reason; zero when neither has one.
Money joint_cap_exclusion(const CoupleFacts& c, const StatuteParams& p);

/// Evaluate both readings on identical facts and compare exactly.
InterpretationOutcome evaluate(const CoupleFacts& c, const StatuteParams& p);

/// Excludable amount for an actual sale: min(limit, realized gain).
/// Rejects negative gain.
Money apply_gain_cap(const Money& limit, const Money& gain);

}  // namespace s121
