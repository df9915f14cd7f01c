#ifndef CACHEOPT_ALLOCATORS_HPP
#define CACHEOPT_ALLOCATORS_HPP

#include <optional>
#include <string_view>

#include "cacheopt/model.hpp"

// Closed-form buffer allocators, one per caching objective, plus the
// bound-repair stage and the integer rounding stage. Each closed form is
// exact for the interior case; coordinates driven past a bound are pinned
// there and the form is re-solved on the remainder, with the pin set
// chosen so the re-solved shares themselves respect every bound.

namespace cacheopt {

enum class StrategyKind {
    TotalCalls,      // minimize F1: U_i proportional to sqrt(N_i W_i)
    MinimaxRatio,    // minimize F2: U_i proportional to W_i
    WeightedMinimax, // minimize F3: U_i proportional to N_i W_i
    NearestToIdeal,  // minimize F4: equal residuals W_i - U_i
};

inline constexpr StrategyKind kAllStrategies[] = {
    StrategyKind::TotalCalls,
    StrategyKind::MinimaxRatio,
    StrategyKind::WeightedMinimax,
    StrategyKind::NearestToIdeal,
};

std::string_view strategy_name(StrategyKind kind);
std::optional<StrategyKind> strategy_from_name(std::string_view name);

// Dispatches to the matching closed form. Result is feasible with
// sum U_i = min(V, sum W_i). Throws BudgetTooSmallError when V < H.
Allocation allocate(const Workload& w, StrategyKind kind);

Allocation allocate_total_calls(const Workload& w);
Allocation allocate_minimax_ratio(const Workload& w);
Allocation allocate_weighted_minimax(const Workload& w);
Allocation allocate_nearest_ideal(const Workload& w);

// Bound repair: returns `raw` unchanged when every coordinate already
// respects its bounds; otherwise rebuilds the allocation as the
// strategy's consistent pin-and-resolve solution, where pinned
// coordinates sit on a bound and the closed form spends the rest of the
// budget on the others without pushing any of them out of bounds. `raw`
// must have workload length and sum to min(V, sum W_i) within tolerance.
Allocation clamp_redistribute(const Workload& w, const std::vector<double>& raw,
                              StrategyKind kind);

// Largest-remainder rounding: floor every entry (never below 1), then
// hand the leftover budget units to entries in descending order of
// fractional part, skipping entries at their W_i cap, ties broken by
// lower index. Output is integral, feasible, and sums to the budget
// exactly.
Allocation round_to_integers(const Workload& w, const Allocation& real_alloc);

}  // namespace cacheopt

#endif
