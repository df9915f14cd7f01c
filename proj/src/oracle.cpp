#include "cacheopt/oracle.hpp"

#include <algorithm>

namespace cacheopt {

std::string_view objective_name(Objective objective) {
    switch (objective) {
        case Objective::F1: return "f1";
        case Objective::F2: return "f2";
        case Objective::F3: return "f3";
        case Objective::F4: return "f4";
    }
    return "unknown";
}

std::optional<Objective> objective_from_name(std::string_view name) {
    for (Objective objective : kAllObjectives)
        if (name == objective_name(objective)) return objective;
    return std::nullopt;
}

StrategyKind strategy_for_objective(Objective objective) {
    switch (objective) {
        case Objective::F1: return StrategyKind::TotalCalls;
        case Objective::F2: return StrategyKind::MinimaxRatio;
        case Objective::F3: return StrategyKind::WeightedMinimax;
        case Objective::F4: return StrategyKind::NearestToIdeal;
    }
    throw std::logic_error("unknown objective");
}

Objective objective_for_strategy(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::TotalCalls: return Objective::F1;
        case StrategyKind::MinimaxRatio: return Objective::F2;
        case StrategyKind::WeightedMinimax: return Objective::F3;
        case StrategyKind::NearestToIdeal: return Objective::F4;
    }
    throw std::logic_error("unknown strategy");
}

double evaluate_objective(const Workload& w, const Allocation& a, Objective objective) {
    switch (objective) {
        case Objective::F1: return evaluate_f1(w, a);
        case Objective::F2: return evaluate_f2(w, a);
        case Objective::F3: return evaluate_f3(w, a);
        case Objective::F4: return evaluate_f4(w, a);
    }
    throw std::logic_error("unknown objective");
}

EnumerationLimitError::EnumerationLimitError(std::int64_t limit)
    : std::runtime_error("instance exceeds the oracle enumeration limit of " +
                         std::to_string(limit) + " points") {}

FeasibleEnumerator::FeasibleEnumerator(const Workload& w) : workload_(&w) {
    const std::size_t count = w.file_count();
    if (w.free_memory < static_cast<std::int64_t>(count))
        throw BudgetTooSmallError(w.free_memory, count);

    // Overflow-safe product guard: prod(min(W_i, V)) <= kEnumerationLimit.
    std::int64_t bound = 1;
    for (const FileSpec& f : w.files) {
        std::int64_t factor = std::min(f.size_blocks, w.free_memory);
        if (bound > kEnumerationLimit / factor) throw EnumerationLimitError(kEnumerationLimit);
        bound *= factor;
    }

    suffix_caps_.assign(count + 1, 0);
    for (std::size_t i = count; i-- > 0;)
        suffix_caps_[i] = suffix_caps_[i + 1] + w.files[i].size_blocks;
    current_.assign(count, 0);
}

bool FeasibleEnumerator::next(std::vector<std::int64_t>& out) {
    if (exhausted_) return false;
    const std::size_t count = workload_->file_count();

    // Lexicographically smallest completion of positions from..end with
    // `remaining` blocks: each position takes the least it can while the
    // rest of the suffix can still absorb the remainder.
    auto fill_min = [&](std::size_t from, std::int64_t remaining) {
        for (std::size_t i = from; i < count; ++i) {
            std::int64_t lo = std::max<std::int64_t>(1, remaining - suffix_caps_[i + 1]);
            current_[i] = lo;
            remaining -= lo;
        }
    };

    if (!started_) {
        started_ = true;
        fill_min(0, workload_->budget());
        out = current_;
        return true;
    }

    // Find the rightmost position that can take one more block while the
    // suffix behind it can still give one up (each entry there stays >= 1).
    std::int64_t suffix_sum = 0;
    for (std::size_t i = count; i-- > 0;) {
        std::int64_t tail = static_cast<std::int64_t>(count - 1 - i);
        if (i + 1 < count && current_[i] < workload_->files[i].size_blocks &&
            suffix_sum - 1 >= tail) {
            ++current_[i];
            fill_min(i + 1, suffix_sum - 1);
            out = current_;
            return true;
        }
        suffix_sum += current_[i];
    }
    exhausted_ = true;
    return false;
}

std::vector<Allocation> enumerate_feasible(const Workload& w) {
    FeasibleEnumerator stream(w);
    std::vector<Allocation> all;
    std::vector<std::int64_t> candidate;
    while (stream.next(candidate)) all.push_back(Allocation::integers(candidate));
    return all;
}

OracleResult brute_force_optimum(const Workload& w, Objective objective) {
    FeasibleEnumerator stream(w);
    OracleResult result;
    result.objective = objective;

    // Scratch allocation reused across candidates to keep the scan cheap.
    Allocation scratch;
    scratch.integral = true;
    scratch.buffers.assign(w.file_count(), 0.0);

    std::vector<std::int64_t> candidate;
    bool first = true;
    while (stream.next(candidate)) {
        ++result.instances_enumerated;
        for (std::size_t i = 0; i < candidate.size(); ++i)
            scratch.buffers[i] = static_cast<double>(candidate[i]);
        double value = evaluate_objective(w, scratch, objective);
        if (first || value < result.optimal_value) {
            first = false;
            result.optimal_value = value;
            result.optima.clear();
        }
        // Exact ties only: identical file sets produce bitwise-identical
        // objective values, so == keeps baselines stable.
        if (value == result.optimal_value) result.optima.push_back(Allocation::integers(candidate));
    }
    return result;
}

namespace {

// System3 asks for componentwise >= on the U_i with one strict; System1
// asks for componentwise <= on the ratios W_i/U_i with one strict, and
// dividing the fixed positive W_i reverses the order, so both modes come
// down to the same integer comparison -- no floating-point ties.
bool dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strictly_better = true;
    }
    return strictly_better;
}

}  // namespace

ParetoFront pareto_front(const Workload& w, CriteriaMode mode) {
    FeasibleEnumerator stream(w);
    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::int64_t> candidate;
    while (stream.next(candidate)) all.push_back(candidate);

    ParetoFront front;
    front.criteria_mode = mode;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j)
            if (j != i && dominates(all[j], all[i])) dominated = true;
        if (!dominated) front.points.push_back(Allocation::integers(all[i]));
    }
    return front;
}

}  // namespace cacheopt
