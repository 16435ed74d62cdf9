#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "s121/money.hpp"

namespace s121 {

/// Time unit a fact set is expressed in. Facts are never converted between
/// units; each unit carries its own full test length (730 days, 24 months,
/// 2 years).
enum class TimeUnit { days, months, years };

std::string to_string(TimeUnit unit);
TimeUnit parse_time_unit(const std::string& text);

/// Non-negative count of whole periods in one fixed time unit. Comparisons
/// are only meaningful between lengths in the same unit.
class PeriodLength {
public:
    PeriodLength() = default;

    explicit PeriodLength(long long count) : count_(count) {
        if (count < 0) throw std::invalid_argument("period length must be non-negative");
    }

    long long count() const { return count_; }

    auto operator<=>(const PeriodLength&) const = default;

private:
    long long count_ = 0;
};

inline PeriodLength min(PeriodLength a, PeriodLength b) { return b < a ? b : a; }
inline PeriodLength max(PeriodLength a, PeriodLength b) { return a < b ? b : a; }

/// One spouse's facts. An absent since_prior_exclusion means the spouse never
/// claimed the exclusion before, which the engine treats as satisfying the
/// prior-exclusion test exactly (no worse, no better).
struct SpouseTimeline {
    PeriodLength ownership;
    PeriodLength use;
    std::optional<PeriodLength> since_prior_exclusion;
    bool qualifying_reason = false;

    bool operator==(const SpouseTimeline&) const = default;
};

struct CoupleFacts {
    SpouseTimeline spouse_a;
    SpouseTimeline spouse_b;

    bool operator==(const CoupleFacts&) const = default;
};

inline CoupleFacts swap_spouses(const CoupleFacts& c) { return {c.spouse_b, c.spouse_a}; }

/// Candidate numerators for the reduced joint cap. They differ in how the two
/// spouses' histories are combined, which is exactly where the statute text
/// underdetermines the computation.
enum class NumeratorMode { min_six, min_three_joint, held_b2a_months };

std::string to_string(NumeratorMode mode);
NumeratorMode parse_numerator_mode(const std::string& text);

/// Per-period combine rules used by the cross-validation grid.
enum class CombineRule { minimum, maximum, average };

std::string to_string(CombineRule rule);
CombineRule parse_combine_rule(const std::string& text);

PeriodLength full_test_length_for(TimeUnit unit);

struct StatuteParams {
    TimeUnit time_unit = TimeUnit::months;
    PeriodLength full_test_length{24};
    Money base_limit = Money::dollars(250'000);
    Money joint_limit = Money::dollars(500'000);
    NumeratorMode numerator_mode = NumeratorMode::min_six;
    std::optional<CombineRule> combine_rule;

    static StatuteParams defaults(TimeUnit unit = TimeUnit::months);
};

/// min(ownership, use, prior-or-full-test-length). The binding constraint for
/// an individual's qualification.
PeriodLength shortest_of_three(const SpouseTimeline& t, const StatuteParams& p);

/// period >= full_test_length.
bool meets_time_test(PeriodLength period, const StatuteParams& p);

/// min(shortest_of_three, full_test_length) / full_test_length, exact in [0, 1].
Rational proration_ratio(const SpouseTimeline& t, const StatuteParams& p);

/// Prior-exclusion period with "never claimed" normalized to the full test
/// length.
PeriodLength prior_or_full(const SpouseTimeline& t, const StatuteParams& p);

}  // namespace s121
