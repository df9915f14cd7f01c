#ifndef CACHEOPT_ORACLE_HPP
#define CACHEOPT_ORACLE_HPP

#include <optional>
#include <string_view>

#include "cacheopt/allocators.hpp"
#include "cacheopt/model.hpp"

// Exhaustive integer-allocation enumeration: ground-truth optima for the
// four objectives and Pareto fronts on desk-scale instances. Everything
// here is deliberately brute force -- its only job is to be trustworthy.

namespace cacheopt {

enum class Objective { F1, F2, F3, F4 };

inline constexpr Objective kAllObjectives[] = {
    Objective::F1, Objective::F2, Objective::F3, Objective::F4};

std::string_view objective_name(Objective objective);
std::optional<Objective> objective_from_name(std::string_view name);

// Each objective has one closed-form strategy designed for it.
StrategyKind strategy_for_objective(Objective objective);
Objective objective_for_strategy(StrategyKind kind);

// Dispatches to evaluate_f1 .. evaluate_f4.
double evaluate_objective(const Workload& w, const Allocation& a, Objective objective);

// Upper bound on prod(min(W_i, V)); instances above it are rejected, never
// sampled, so oracle answers are always exact.
inline constexpr std::int64_t kEnumerationLimit = 10'000'000;

class EnumerationLimitError : public std::runtime_error {
public:
    explicit EnumerationLimitError(std::int64_t limit);
};

// Streams the integer compositions of min(V, sum W_i) into one part per
// file, part i in [1, W_i], in lexicographically ascending order.
class FeasibleEnumerator {
public:
    // Throws BudgetTooSmallError when V < H and EnumerationLimitError when
    // prod(min(W_i, V)) exceeds kEnumerationLimit.
    explicit FeasibleEnumerator(const Workload& w);

    // Fills `out` with the next allocation; false once exhausted.
    bool next(std::vector<std::int64_t>& out);

private:
    const Workload* workload_;
    std::vector<std::int64_t> current_;
    std::vector<std::int64_t> suffix_caps_;  // sum of W_j for j >= i
    bool started_ = false;
    bool exhausted_ = false;
};

// Materializes the whole stream; prefer the enumerator in hot loops.
std::vector<Allocation> enumerate_feasible(const Workload& w);

struct OracleResult {
    Objective objective = Objective::F1;
    double optimal_value = 0;
    std::vector<Allocation> optima;  // all exact ties, enumeration order
    std::int64_t instances_enumerated = 0;
};

// Scans the full enumeration through the model evaluators and keeps every
// allocation achieving the minimum.
OracleResult brute_force_optimum(const Workload& w, Objective objective);

// System1 minimizes every per-file ratio W_i/U_i; System3 maximizes every
// buffer size U_i. Under the fixed-budget equality the two orders
// coincide, but each mode applies its own criteria.
enum class CriteriaMode { System1, System3 };

struct ParetoFront {
    CriteriaMode criteria_mode = CriteriaMode::System3;
    std::vector<Allocation> points;  // enumeration order
};

// Pairwise dominance filter over the full enumeration. A point is dropped
// only if some feasible point is at least as good on every criterion and
// strictly better on one.
ParetoFront pareto_front(const Workload& w, CriteriaMode mode);

}  // namespace cacheopt

#endif
