#pragma once

// Test-only reference implementations. The value oracle recomputes both
// readings as straight-line arithmetic with no calls into the engine's
// helpers; the search oracle is the exhaustive filter that bounded_search
// must match exactly, pruning or not.

#include <algorithm>
#include <optional>
#include <utility>

#include "s121/search.hpp"

namespace s121::oracle {

inline long long prior_of(const SpouseTimeline& s, long long t) {
    return s.since_prior_exclusion ? s.since_prior_exclusion->count() : t;
}

inline Rational spouse_limit(const SpouseTimeline& s, long long t, const Rational& base) {
    long long shortest = std::min({s.ownership.count(), s.use.count(), prior_of(s, t)});
    if (shortest >= t) return base;
    if (!s.qualifying_reason) return Rational(0);
    return base * Rational(std::min(shortest, t), t);
}

inline Rational sum_reading(const CoupleFacts& c, const StatuteParams& p) {
    long long t = p.full_test_length.count();
    return spouse_limit(c.spouse_a, t, p.base_limit.value()) +
           spouse_limit(c.spouse_b, t, p.base_limit.value());
}

inline Rational joint_reading(const CoupleFacts& c, const StatuteParams& p) {
    long long t = p.full_test_length.count();
    long long own_a = c.spouse_a.ownership.count(), own_b = c.spouse_b.ownership.count();
    long long use_a = c.spouse_a.use.count(), use_b = c.spouse_b.use.count();
    long long pri_a = prior_of(c.spouse_a, t), pri_b = prior_of(c.spouse_b, t);

    bool all_six_pass = own_a >= t && own_b >= t && use_a >= t && use_b >= t &&
                        pri_a >= t && pri_b >= t;
    if (all_six_pass) return p.joint_limit.value();
    if (!c.spouse_a.qualifying_reason && !c.spouse_b.qualifying_reason) return Rational(0);

    long long numerator = 0;
    switch (p.numerator_mode) {
        case NumeratorMode::min_six:
            numerator = std::min({own_a, own_b, use_a, use_b, pri_a, pri_b});
            break;
        case NumeratorMode::min_three_joint:
            numerator = std::min({std::max(own_a, own_b), std::min(use_a, use_b),
                                  std::min(pri_a, pri_b)});
            break;
        case NumeratorMode::held_b2a_months:
            numerator = (own_a >= t || own_b >= t)
                            ? std::min(std::min(use_a, use_b), std::min(pri_a, pri_b))
                            : 0;
            break;
    }
    return p.joint_limit.value() * Rational(std::min(numerator, t), t);
}

/// Exhaustive lexicographic filter of evaluate over the whole domain: the
/// ground truth that any pruned search must reproduce witness for witness.
inline std::vector<DivergenceWitness> naive_search(const SearchDomain& d,
                                                   const StatuteParams& p,
                                                   std::size_t limit = SIZE_MAX) {
    std::vector<DivergenceWitness> out;
    for (long long oa = d.own_a.lo; oa <= d.own_a.hi; ++oa)
        for (long long ua = d.use_a.lo; ua <= d.use_a.hi; ++ua)
            for (long long pa = d.prior_a.lo; pa <= d.prior_a.hi; ++pa)
                for (long long ob = d.own_b.lo; ob <= d.own_b.hi; ++ob)
                    for (long long ub = d.use_b.lo; ub <= d.use_b.hi; ++ub)
                        for (long long pb = d.prior_b.lo; pb <= d.prior_b.hi; ++pb) {
                            if (out.size() >= limit) return out;
                            CoupleFacts c;
                            c.spouse_a = {PeriodLength(oa), PeriodLength(ua),
                                          PeriodLength(pa), d.reason_a};
                            c.spouse_b = {PeriodLength(ob), PeriodLength(ub),
                                          PeriodLength(pb), d.reason_b};
                            if (d.constraint == DomainConstraint::some_time_test_fails &&
                                couple_fully_qualifies(c, p))
                                continue;
                            InterpretationOutcome outcome = evaluate(c, p);
                            if (outcome.diverges) out.push_back({c, outcome});
                        }
    return out;
}

}  // namespace s121::oracle
