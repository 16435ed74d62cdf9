#include "s121/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace s121 {

namespace {

void run_indexed(long long n, int threads, const std::function<void(long long)>& body) {
    if (threads < 1) throw std::invalid_argument("thread count must be at least 1");
    if (threads == 1 || n <= 1) {
        for (long long i = 0; i < n; ++i) body(i);
        return;
    }
    long long workers = std::min<long long>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long long i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

SweepRow sweep_row(long long p_value, const StatuteParams& params) {
    CoupleFacts facts;
    facts.spouse_a = {PeriodLength(120), PeriodLength(120), PeriodLength(120), false};
    facts.spouse_b = {PeriodLength(120), PeriodLength(120), PeriodLength(p_value), true};

    SweepRow row;
    row.p = p_value;
    row.sum_a = sum_of_limitations(facts, params);

    StatuteParams mode_params = params;
    mode_params.numerator_mode = NumeratorMode::min_six;
    row.min_six = joint_cap_exclusion(facts, mode_params);
    mode_params.numerator_mode = NumeratorMode::min_three_joint;
    row.min_three_joint = joint_cap_exclusion(facts, mode_params);
    mode_params.numerator_mode = NumeratorMode::held_b2a_months;
    row.held_b2a = joint_cap_exclusion(facts, mode_params);
    return row;
}

using Point = std::array<long long, 6>;

CoupleFacts facts_at(const Point& v, const SearchDomain& d) {
    CoupleFacts c;
    c.spouse_a = {PeriodLength(v[0]), PeriodLength(v[1]), PeriodLength(v[2]), d.reason_a};
    c.spouse_b = {PeriodLength(v[3]), PeriodLength(v[4]), PeriodLength(v[5]), d.reason_b};
    return c;
}

bool constraint_holds(const CoupleFacts& c, const StatuteParams& p, DomainConstraint k) {
    switch (k) {
        case DomainConstraint::none: return true;
        case DomainConstraint::some_time_test_fails: return !couple_fully_qualifies(c, p);
    }
    throw std::logic_error("unreachable domain constraint");
}

struct BoxSearch {
    const SearchDomain& domain;
    const StatuteParams& params;
    std::size_t limit;
    std::vector<DivergenceWitness>& out;
    std::array<PeriodRange, 6> ranges;

    bool full() const { return out.size() >= limit; }

    void emit(const Point& v, const InterpretationOutcome& outcome) {
        out.push_back({facts_at(v, domain), outcome});
    }

    /// Walk every point of the box [v with dims >= dim spanning their ranges]
    /// in lexicographic order, emitting each one that satisfies the domain
    /// constraint. Only called once the outcome is known constant on the box.
    void fill_constant(int dim, Point& v, const InterpretationOutcome& outcome) {
        if (full()) return;
        if (dim == 6) {
            if (constraint_holds(facts_at(v, domain), params, domain.constraint))
                emit(v, outcome);
            return;
        }
        for (long long x = ranges[dim].lo; x <= ranges[dim].hi && !full(); ++x) {
            v[dim] = x;
            fill_constant(dim + 1, v, outcome);
        }
    }

    /// Both readings are monotone nondecreasing in every period, so if the
    /// low and high corners of the remaining box produce equal outcomes, the
    /// outcome is constant on the whole box and the box can be skipped or
    /// filled without further evaluation. Pruning therefore never changes the
    /// result set relative to exhaustive enumeration.
    void descend(int dim, Point& v) {
        if (full()) return;

        Point lo = v;
        Point hi = v;
        for (int d = dim; d < 6; ++d) {
            lo[d] = ranges[d].lo;
            hi[d] = ranges[d].hi;
        }
        InterpretationOutcome at_lo = evaluate(facts_at(lo, domain), params);
        InterpretationOutcome at_hi = evaluate(facts_at(hi, domain), params);

        if (at_lo == at_hi) {
            if (!at_lo.diverges) return;
            fill_constant(dim, v, at_lo);
            return;
        }
        for (long long x = ranges[dim].lo; x <= ranges[dim].hi && !full(); ++x) {
            v[dim] = x;
            descend(dim + 1, v);
        }
    }
};

std::array<PeriodRange, 6> domain_ranges(const SearchDomain& d) {
    return {d.own_a, d.use_a, d.prior_a, d.own_b, d.use_b, d.prior_b};
}

void check_domain(const SearchDomain& d) {
    for (const PeriodRange& r : domain_ranges(d)) {
        if (r.lo < 0) throw std::invalid_argument("domain range bound must be non-negative");
        if (r.lo > r.hi) throw std::invalid_argument("domain range is empty");
    }
}

std::vector<DivergenceWitness> search_box(const SearchDomain& domain,
                                          const StatuteParams& params,
                                          std::size_t limit) {
    std::vector<DivergenceWitness> out;
    if (limit == 0) return out;
    BoxSearch search{domain, params, limit, out, domain_ranges(domain)};
    Point v{};
    search.descend(0, v);
    return out;
}

}  // namespace

std::uint64_t SearchDomain::size() const {
    std::uint64_t total = 1;
    for (const PeriodRange& r : domain_ranges(*this)) {
        if (r.lo > r.hi) return 0;
        std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
        if (total > std::numeric_limits<std::uint64_t>::max() / span)
            return std::numeric_limits<std::uint64_t>::max();
        total *= span;
    }
    return total;
}

std::vector<SweepRow> sweep_prior_exclusion(long long lo, long long hi,
                                            const StatuteParams& p, int threads) {
    if (lo < 0) throw std::invalid_argument("sweep range must be non-negative");
    if (lo > hi) throw std::invalid_argument("sweep range is empty");

    long long n = hi - lo + 1;
    std::vector<SweepRow> rows(static_cast<std::size_t>(n));
    run_indexed(n, threads, [&](long long i) { rows[static_cast<std::size_t>(i)] = sweep_row(lo + i, p); });
    return rows;
}

std::vector<DivergenceWitness> bounded_search(const SearchDomain& domain,
                                              const StatuteParams& p,
                                              const SearchOptions& options) {
    check_domain(domain);
    if (domain.size() > options.safety_bound && !options.override_safety_bound)
        throw std::invalid_argument(
            "domain size " + std::to_string(domain.size()) + " exceeds safety bound " +
            std::to_string(options.safety_bound) + "; pass the override flag to search it");
    if (options.threads < 1) throw std::invalid_argument("thread count must be at least 1");

    // Chunk the first non-singleton dimension; earlier dimensions are fixed,
    // so chunk order is lexicographic order and concatenation preserves it.
    int split_dim = 0;
    auto ranges = domain_ranges(domain);
    while (split_dim < 6 && ranges[split_dim].lo == ranges[split_dim].hi) ++split_dim;

    long long span = split_dim < 6 ? ranges[split_dim].hi - ranges[split_dim].lo + 1 : 1;
    long long chunks = std::min<long long>(options.threads, span);
    if (chunks <= 1 || split_dim == 6)
        return search_box(domain, p, options.limit);

    std::vector<std::vector<DivergenceWitness>> partial(static_cast<std::size_t>(chunks));
    run_indexed(chunks, options.threads, [&](long long i) {
        SearchDomain piece = domain;
        PeriodRange whole = ranges[static_cast<std::size_t>(split_dim)];
        long long chunk_lo = whole.lo + i * span / chunks;
        long long chunk_hi = whole.lo + (i + 1) * span / chunks - 1;
        PeriodRange* slot[] = {&piece.own_a, &piece.use_a, &piece.prior_a,
                               &piece.own_b, &piece.use_b, &piece.prior_b};
        *slot[split_dim] = {chunk_lo, chunk_hi};
        partial[static_cast<std::size_t>(i)] = search_box(piece, p, options.limit);
    });

    std::vector<DivergenceWitness> out;
    for (auto& part : partial) {
        for (auto& w : part) {
            if (out.size() >= options.limit) return out;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::string to_string(VariableId id) {
    switch (id) {
        case VariableId::own_a: return "own_a";
        case VariableId::use_a: return "use_a";
        case VariableId::prior_a: return "prior_a";
        case VariableId::own_b: return "own_b";
        case VariableId::use_b: return "use_b";
        case VariableId::prior_b: return "prior_b";
    }
    throw std::logic_error("unreachable variable id");
}

std::vector<std::pair<long long, long long>> find_inconsistency_zone(
    VariableId vary, long long lo, long long hi, const CoupleFacts& fixed,
    const StatuteParams& p) {
    if (lo < 0) throw std::invalid_argument("scan range must be non-negative");
    if (lo > hi) throw std::invalid_argument("scan range is empty");

    std::vector<std::pair<long long, long long>> zones;
    bool in_run = false;
    for (long long x = lo; x <= hi; ++x) {
        CoupleFacts c = fixed;
        PeriodLength value(x);
        switch (vary) {
            case VariableId::own_a: c.spouse_a.ownership = value; break;
            case VariableId::use_a: c.spouse_a.use = value; break;
            case VariableId::prior_a: c.spouse_a.since_prior_exclusion = value; break;
            case VariableId::own_b: c.spouse_b.ownership = value; break;
            case VariableId::use_b: c.spouse_b.use = value; break;
            case VariableId::prior_b: c.spouse_b.since_prior_exclusion = value; break;
        }
        if (evaluate(c, p).diverges) {
            if (!in_run) {
                zones.emplace_back(x, x);
                in_run = true;
            } else {
                zones.back().second = x;
            }
        } else {
            in_run = false;
        }
    }
    return zones;
}

Rational grid_numerator_ratio(const CoupleFacts& c, const StatuteParams& p,
                              CombineRule rule) {
    long long t = p.full_test_length.count();
    auto capped = [&](const SpouseTimeline& s) {
        return std::array<long long, 3>{std::min(s.ownership.count(), t),
                                        std::min(s.use.count(), t),
                                        std::min(prior_or_full(s, p).count(), t)};
    };
    std::array<long long, 3> a = capped(c.spouse_a);
    std::array<long long, 3> b = capped(c.spouse_b);

    Rational smallest;
    for (int i = 0; i < 3; ++i) {
        Rational combined;
        switch (rule) {
            case CombineRule::minimum: combined = Rational(std::min(a[i], b[i])); break;
            case CombineRule::maximum: combined = Rational(std::max(a[i], b[i])); break;
            case CombineRule::average: combined = Rational(a[i] + b[i], 2); break;
        }
        if (i == 0 || combined < smallest) smallest = combined;
    }
    return smallest / Rational(t);
}

Money grid_joint_reading(const CoupleFacts& c, const StatuteParams& p,
                         CombineRule rule) {
    if (couple_fully_qualifies(c, p)) return p.joint_limit;
    if (either_spouse_has_reason(c)) return p.joint_limit * grid_numerator_ratio(c, p, rule);
    return Money::dollars(0);
}

std::vector<GridCell> cross_validation_grid(
    const std::map<TimeUnit, CoupleFacts>& facts_by_unit,
    const std::vector<CombineRule>& rules) {
    if (facts_by_unit.empty()) throw std::invalid_argument("no fact sets supplied");
    if (rules.empty()) throw std::invalid_argument("no combine rules requested");

    std::vector<GridCell> cells;
    for (const auto& [unit, facts] : facts_by_unit) {
        StatuteParams params = StatuteParams::defaults(unit);
        Money sum = sum_of_limitations(facts, params);
        for (CombineRule rule : {CombineRule::minimum, CombineRule::maximum, CombineRule::average}) {
            if (std::find(rules.begin(), rules.end(), rule) == rules.end()) continue;
            GridCell cell;
            cell.unit = unit;
            cell.rule = rule;
            cell.sum_reading = sum;
            cell.joint_reading = grid_joint_reading(facts, params, rule);
            cell.converged = cell.sum_reading == cell.joint_reading;
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace s121
