#include "cacheopt/allocators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cacheopt {

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::TotalCalls: return "total-calls";
        case StrategyKind::MinimaxRatio: return "minimax-ratio";
        case StrategyKind::WeightedMinimax: return "weighted-minimax";
        case StrategyKind::NearestToIdeal: return "nearest-ideal";
    }
    return "unknown";
}

std::optional<StrategyKind> strategy_from_name(std::string_view name) {
    for (StrategyKind kind : kAllStrategies)
        if (name == strategy_name(kind)) return kind;
    return std::nullopt;
}

namespace {

void require_budget(const Workload& w) {
    if (w.free_memory < static_cast<std::int64_t>(w.file_count()))
        throw BudgetTooSmallError(w.free_memory, w.file_count());
}

double proportional_weight(const FileSpec& f, StrategyKind kind) {
    double w = static_cast<double>(f.size_blocks);
    switch (kind) {
        case StrategyKind::TotalCalls:
            return std::sqrt(static_cast<double>(f.scan_count) * w);
        case StrategyKind::MinimaxRatio:
            return w;
        case StrategyKind::WeightedMinimax:
            return static_cast<double>(f.scan_count) * w;
        case StrategyKind::NearestToIdeal:
            break;
    }
    throw std::logic_error("NearestToIdeal has no proportional weight");
}

// Both closed-form families are monotone in a single parameter once the
// bounds enter: shares c * w_i clamped into [1, W_i] grow with c, and
// residuals W_i - d floored at one block shrink with d. The consistent
// pin set therefore falls out of a sweep over the bound-crossing
// breakpoints; pinning violations pass by pass is order-sensitive and can
// strand budget when floors and caps fire together.

// U_i = clamp(c * w_i, 1, W_i) with sum U = budget: find the breakpoint
// segment holding the budget, classify each coordinate there, and spend
// what the pins leave on the interior in proportion to its weights.
Allocation proportional_fixpoint(const Workload& w, StrategyKind kind) {
    const std::size_t count = w.file_count();
    const double budget = static_cast<double>(w.budget());
    std::vector<double> weight(count);
    for (std::size_t i = 0; i < count; ++i)
        weight[i] = proportional_weight(w.files[i], kind);

    std::vector<double> breaks;
    breaks.reserve(2 * count);
    for (std::size_t i = 0; i < count; ++i) {
        breaks.push_back(1.0 / weight[i]);
        breaks.push_back(static_cast<double>(w.files[i].size_blocks) / weight[i]);
    }
    std::sort(breaks.begin(), breaks.end());

    auto sum_at = [&](double c) {
        double sum = 0;
        for (std::size_t i = 0; i < count; ++i)
            sum += std::clamp(c * weight[i], 1.0,
                              static_cast<double>(w.files[i].size_blocks));
        return sum;
    };
    // The slack keeps rounding hairs at a hinge from pushing the search
    // one segment too far; either side of a hinge yields the same shares.
    const double slack = budget * kRelTol;
    double lo = 0.0;
    double hi = breaks.back();
    for (double b : breaks) {
        if (sum_at(b) >= budget - slack) {
            hi = b;
            break;
        }
        lo = b;
    }
    const double mid = (lo + hi) / 2;

    double spare = budget;
    double interior_weight = 0;
    for (std::size_t i = 0; i < count; ++i) {
        double probe = mid * weight[i];
        if (probe < 1.0)
            spare -= 1.0;
        else if (probe > static_cast<double>(w.files[i].size_blocks))
            spare -= static_cast<double>(w.files[i].size_blocks);
        else
            interior_weight += weight[i];
    }
    std::vector<double> result(count);
    for (std::size_t i = 0; i < count; ++i) {
        double cap = static_cast<double>(w.files[i].size_blocks);
        double probe = mid * weight[i];
        if (probe < 1.0)
            result[i] = 1.0;
        else if (probe > cap)
            result[i] = cap;
        else
            result[i] = spare * weight[i] / interior_weight;
    }
    return Allocation::real(std::move(result));
}

// U_i = max(1, W_i - d) with sum U = budget, or full caching once the
// budget covers every file. Same sweep, on the floor breakpoints.
Allocation nearest_ideal_fixpoint(const Workload& w) {
    const std::size_t count = w.file_count();
    const double budget = static_cast<double>(w.budget());
    std::vector<double> result(count);
    if (w.budget() >= w.total_size()) {
        for (std::size_t i = 0; i < count; ++i)
            result[i] = static_cast<double>(w.files[i].size_blocks);
        return Allocation::real(std::move(result));
    }
    std::vector<double> breaks;
    breaks.reserve(count);
    for (const FileSpec& f : w.files)
        breaks.push_back(static_cast<double>(f.size_blocks) - 1.0);
    std::sort(breaks.begin(), breaks.end());

    auto sum_at = [&](double d) {
        double sum = 0;
        for (const FileSpec& f : w.files)
            sum += std::max(1.0, static_cast<double>(f.size_blocks) - d);
        return sum;
    };
    double lo = 0.0;
    double hi = breaks.back();
    for (double b : breaks) {
        if (sum_at(b) <= budget) {
            hi = b;
            break;
        }
        lo = b;
    }
    const double mid = (lo + hi) / 2;

    double active_size = 0;
    double active_count = 0;
    for (const FileSpec& f : w.files) {
        double size = static_cast<double>(f.size_blocks);
        if (size - mid >= 1.0) {
            active_size += size;
            active_count += 1;
        }
    }
    double spare = budget - (static_cast<double>(count) - active_count);
    double deficit = (active_size - spare) / active_count;
    for (std::size_t i = 0; i < count; ++i) {
        double size = static_cast<double>(w.files[i].size_blocks);
        result[i] = size - mid >= 1.0 ? size - deficit : 1.0;
    }
    return Allocation::real(std::move(result));
}

Allocation closed_form_allocation(const Workload& w, StrategyKind kind) {
    require_budget(w);
    return kind == StrategyKind::NearestToIdeal ? nearest_ideal_fixpoint(w)
                                                : proportional_fixpoint(w, kind);
}

}  // namespace

Allocation allocate(const Workload& w, StrategyKind kind) {
    return closed_form_allocation(w, kind);
}

Allocation allocate_total_calls(const Workload& w) {
    return closed_form_allocation(w, StrategyKind::TotalCalls);
}

Allocation allocate_minimax_ratio(const Workload& w) {
    return closed_form_allocation(w, StrategyKind::MinimaxRatio);
}

Allocation allocate_weighted_minimax(const Workload& w) {
    return closed_form_allocation(w, StrategyKind::WeightedMinimax);
}

Allocation allocate_nearest_ideal(const Workload& w) {
    return closed_form_allocation(w, StrategyKind::NearestToIdeal);
}

Allocation clamp_redistribute(const Workload& w, const std::vector<double>& raw,
                              StrategyKind kind) {
    require_budget(w);
    if (raw.size() != w.file_count())
        throw std::invalid_argument("raw allocation length does not match the workload");
    double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!nearly_equal(sum, static_cast<double>(w.budget())))
        throw std::invalid_argument("raw allocation does not sum to the budget");
    bool in_bounds = true;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        double cap = static_cast<double>(w.files[i].size_blocks);
        bool low = raw[i] < 1.0 && !nearly_equal(raw[i], 1.0);
        bool high = raw[i] > cap && !nearly_equal(raw[i], cap);
        in_bounds &= !low && !high;
    }
    if (in_bounds) return Allocation::real(raw);
    return closed_form_allocation(w, kind);
}

Allocation round_to_integers(const Workload& w, const Allocation& real_alloc) {
    auto violations = check_feasible(w, real_alloc);
    if (!violations.empty()) throw FeasibilityError(std::move(violations));

    const std::size_t count = w.file_count();
    std::vector<std::int64_t> assigned(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto floored = static_cast<std::int64_t>(std::floor(real_alloc.buffers[i]));
        assigned[i] = std::clamp(floored, std::int64_t{1}, w.files[i].size_blocks);
    }
    std::int64_t remaining = w.budget() - std::accumulate(assigned.begin(), assigned.end(),
                                                          std::int64_t{0});

    // Descending fractional part relative to what the floor already took;
    // ties fall back to the lower index.
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double fa = real_alloc.buffers[a] - static_cast<double>(assigned[a]);
        double fb = real_alloc.buffers[b] - static_cast<double>(assigned[b]);
        return fa > fb;
    });
    while (remaining > 0) {
        bool progressed = false;
        for (std::size_t i : order) {
            if (remaining == 0) break;
            if (assigned[i] < w.files[i].size_blocks) {
                ++assigned[i];
                --remaining;
                progressed = true;
            }
        }
        if (!progressed)
            throw std::logic_error("rounding could not place the full budget");
    }
    return Allocation::integers(assigned);
}

}  // namespace cacheopt
