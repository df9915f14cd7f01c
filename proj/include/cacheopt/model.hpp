#ifndef CACHEOPT_MODEL_HPP
#define CACHEOPT_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types and objective evaluators for the per-file cache-buffer
// sizing problem: H external files, file i of size W_i blocks scanned
// N_i times, sharing a main-memory budget of V blocks split into private
// per-file buffers U_i with 1 <= U_i <= W_i and sum U_i = min(V, sum W_i).

namespace cacheopt {

// All real-valued comparisons in this library use this relative tolerance.
inline constexpr double kRelTol = 1e-9;

// |a - b| <= rel * max(|a|, |b|, 1).
bool nearly_equal(double a, double b, double rel = kRelTol);

struct FileSpec {
    std::string name;
    std::int64_t size_blocks = 0;  // W_i, >= 1
    std::int64_t scan_count = 0;   // N_i, >= 1
};

struct Workload {
    std::vector<FileSpec> files;
    std::int64_t free_memory = 0;  // V, >= file count

    std::size_t file_count() const { return files.size(); }
    std::int64_t total_size() const;                // sum of W_i
    std::int64_t total_weighted_size() const;       // sum of N_i * W_i
    // The binding buffer budget: min(V, sum W_i). Memory beyond the point
    // where every file is fully cached stays unused.
    std::int64_t budget() const;
};

// Structural problems with a workload (empty file list, nonpositive
// sizes or scan counts, duplicate names, V below the file count).
// Empty result means the workload invariants hold.
std::vector<std::string> workload_problems(const Workload& w);

// A buffer-size vector aligned index-for-index with the workload's files.
// Real-valued allocations come out of the closed forms; integral ones out
// of rounding or enumeration.
struct Allocation {
    std::vector<double> buffers;
    bool integral = false;

    static Allocation real(std::vector<double> buffers);
    static Allocation integers(const std::vector<std::int64_t>& buffers);

    std::size_t size() const { return buffers.size(); }
    // Requires integral == true.
    std::vector<std::int64_t> as_integers() const;
};

enum class ViolationKind {
    LengthMismatch,
    LowerBound,   // U_i < 1
    UpperBound,   // U_i > W_i
    BudgetSum,    // sum U_i != min(V, sum W_i)
};

struct Violation {
    ViolationKind kind;
    std::size_t file_index;  // bound violations only; 0 otherwise
    std::string message;
};

// Empty iff the allocation is feasible for the workload. Real-valued
// allocations are judged at kRelTol; integral ones exactly.
std::vector<Violation> check_feasible(const Workload& w, const Allocation& a);

class FeasibilityError : public std::runtime_error {
public:
    explicit FeasibilityError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// Thrown when V < H: the budget cannot give every file its minimum
// one-block buffer.
class BudgetTooSmallError : public std::runtime_error {
public:
    BudgetTooSmallError(std::int64_t free_memory, std::size_t file_count);
};

// y_i = signum(W_i - U_i): 0 when file i is fully cached (U_i = W_i,
// judged at kRelTol for real allocations), 1 otherwise.
std::vector<int> cached_flags(const Workload& w, const Allocation& a);

// F1 = sum (W_i/U_i) * N_i * y_i  -- total external-memory calls.
double evaluate_f1(const Workload& w, const Allocation& a);
// F2 = max W_i/U_i  -- worst per-scan call count over files (no y factor).
double evaluate_f2(const Workload& w, const Allocation& a);
// F3 = max N_i * y_i * W_i/U_i  -- worst total call count over files.
double evaluate_f3(const Workload& w, const Allocation& a);
// F4 = sum (W_i - U_i)^2  -- squared distance to the full-caching point.
double evaluate_f4(const Workload& w, const Allocation& a);

struct ObjectiveReport {
    double f1 = 0;
    double f2 = 0;
    double f3 = 0;
    double f4 = 0;
    std::vector<double> per_file_ratio;        // W_i / U_i
    std::vector<double> per_file_utilization;  // U_i / W_i
    std::vector<int> cached_flags;             // y_i
};

ObjectiveReport evaluate_all(const Workload& w, const Allocation& a);

// The idealized best/worst points in criteria space: standard "a" is the
// full file-size vector, standard "b" the all-ones vector.
struct ComparisonStandards {
    std::vector<double> standard_a;
    std::vector<double> standard_b;
};

ComparisonStandards comparison_standards(const Workload& w);

}  // namespace cacheopt

#endif
