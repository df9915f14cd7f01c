#include "cacheopt/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cacheopt {

bool nearly_equal(double a, double b, double rel) {
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel * scale;
}

std::int64_t Workload::total_size() const {
    std::int64_t sum = 0;
    for (const auto& f : files) sum += f.size_blocks;
    return sum;
}

std::int64_t Workload::total_weighted_size() const {
    std::int64_t sum = 0;
    for (const auto& f : files) sum += f.scan_count * f.size_blocks;
    return sum;
}

std::int64_t Workload::budget() const {
    return std::min(free_memory, total_size());
}

std::vector<std::string> workload_problems(const Workload& w) {
    std::vector<std::string> problems;
    if (w.files.empty()) problems.push_back("workload has no files");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < w.files.size(); ++i) {
        const auto& f = w.files[i];
        if (f.size_blocks < 1)
            problems.push_back("files[" + std::to_string(i) + "].size_blocks must be >= 1");
        if (f.scan_count < 1)
            problems.push_back("files[" + std::to_string(i) + "].scan_count must be >= 1");
        if (!seen.insert(f.name).second)
            problems.push_back("duplicate file name \"" + f.name + "\"");
    }
    if (!w.files.empty() && w.free_memory < static_cast<std::int64_t>(w.files.size()))
        problems.push_back("free_memory " + std::to_string(w.free_memory) +
                           " is below the file count " + std::to_string(w.files.size()));
    return problems;
}

Allocation Allocation::real(std::vector<double> buffers) {
    Allocation a;
    a.buffers = std::move(buffers);
    a.integral = false;
    return a;
}

Allocation Allocation::integers(const std::vector<std::int64_t>& buffers) {
    Allocation a;
    a.buffers.reserve(buffers.size());
    for (std::int64_t b : buffers) a.buffers.push_back(static_cast<double>(b));
    a.integral = true;
    return a;
}

std::vector<std::int64_t> Allocation::as_integers() const {
    if (!integral) throw std::logic_error("as_integers() on a real-valued allocation");
    std::vector<std::int64_t> out;
    out.reserve(buffers.size());
    for (double b : buffers) out.push_back(static_cast<std::int64_t>(b));
    return out;
}

namespace {

std::string format_violation(ViolationKind kind, std::size_t index, double got,
                             double want) {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::LengthMismatch:
            os << "allocation has " << got << " entries, workload has " << want << " files";
            break;
        case ViolationKind::LowerBound:
            os << "buffer " << index << " is " << got << ", below the 1-block minimum";
            break;
        case ViolationKind::UpperBound:
            os << "buffer " << index << " is " << got << ", above the file size " << want;
            break;
        case ViolationKind::BudgetSum:
            os << "buffers sum to " << got << ", budget is " << want;
            break;
    }
    return os.str();
}

}  // namespace

std::vector<Violation> check_feasible(const Workload& w, const Allocation& a) {
    std::vector<Violation> violations;
    if (a.buffers.size() != w.files.size()) {
        violations.push_back({ViolationKind::LengthMismatch, 0,
                              format_violation(ViolationKind::LengthMismatch, 0,
                                               static_cast<double>(a.buffers.size()),
                                               static_cast<double>(w.files.size()))});
        return violations;
    }
    double sum = 0;
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        double u = a.buffers[i];
        double cap = static_cast<double>(w.files[i].size_blocks);
        sum += u;
        bool below = a.integral ? u < 1 : (u < 1 && !nearly_equal(u, 1.0));
        bool above = a.integral ? u > cap : (u > cap && !nearly_equal(u, cap));
        if (below)
            violations.push_back({ViolationKind::LowerBound, i,
                                  format_violation(ViolationKind::LowerBound, i, u, 1)});
        else if (above)
            violations.push_back({ViolationKind::UpperBound, i,
                                  format_violation(ViolationKind::UpperBound, i, u, cap)});
    }
    double budget = static_cast<double>(w.budget());
    bool budget_off = a.integral ? sum != budget : !nearly_equal(sum, budget);
    if (budget_off)
        violations.push_back({ViolationKind::BudgetSum, 0,
                              format_violation(ViolationKind::BudgetSum, 0, sum, budget)});
    return violations;
}

FeasibilityError::FeasibilityError(std::vector<Violation> violations)
    : std::runtime_error([&violations] {
          std::string msg = "infeasible allocation";
          for (const auto& v : violations) msg += "; " + v.message;
          return msg;
      }()),
      violations_(std::move(violations)) {}

BudgetTooSmallError::BudgetTooSmallError(std::int64_t free_memory, std::size_t file_count)
    : std::runtime_error("budget below file count: free memory " +
                         std::to_string(free_memory) + " blocks cannot hold " +
                         std::to_string(file_count) + " one-block buffers") {}

namespace {

void require_feasible(const Workload& w, const Allocation& a) {
    auto violations = check_feasible(w, a);
    if (!violations.empty()) throw FeasibilityError(std::move(violations));
}

}  // namespace

std::vector<int> cached_flags(const Workload& w, const Allocation& a) {
    std::vector<int> flags(a.buffers.size(), 1);
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        double cap = static_cast<double>(w.files[i].size_blocks);
        bool cached = a.integral ? a.buffers[i] == cap : nearly_equal(a.buffers[i], cap);
        if (cached) flags[i] = 0;
    }
    return flags;
}

double evaluate_f1(const Workload& w, const Allocation& a) {
    require_feasible(w, a);
    auto y = cached_flags(w, a);
    double sum = 0;
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        if (y[i] == 0) continue;
        sum += static_cast<double>(w.files[i].size_blocks) / a.buffers[i] *
               static_cast<double>(w.files[i].scan_count);
    }
    return sum;
}

double evaluate_f2(const Workload& w, const Allocation& a) {
    require_feasible(w, a);
    double worst = 0;
    for (std::size_t i = 0; i < a.buffers.size(); ++i)
        worst = std::max(worst, static_cast<double>(w.files[i].size_blocks) / a.buffers[i]);
    return worst;
}

double evaluate_f3(const Workload& w, const Allocation& a) {
    require_feasible(w, a);
    auto y = cached_flags(w, a);
    double worst = 0;
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        if (y[i] == 0) continue;
        worst = std::max(worst, static_cast<double>(w.files[i].scan_count) *
                                    static_cast<double>(w.files[i].size_blocks) /
                                    a.buffers[i]);
    }
    return worst;
}

double evaluate_f4(const Workload& w, const Allocation& a) {
    require_feasible(w, a);
    auto standards = comparison_standards(w);
    double sum = 0;
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        double r = standards.standard_a[i] - a.buffers[i];
        sum += r * r;
    }
    return sum;
}

ObjectiveReport evaluate_all(const Workload& w, const Allocation& a) {
    ObjectiveReport report;
    report.f1 = evaluate_f1(w, a);
    report.f2 = evaluate_f2(w, a);
    report.f3 = evaluate_f3(w, a);
    report.f4 = evaluate_f4(w, a);
    report.cached_flags = cached_flags(w, a);
    report.per_file_ratio.reserve(a.buffers.size());
    report.per_file_utilization.reserve(a.buffers.size());
    for (std::size_t i = 0; i < a.buffers.size(); ++i) {
        double cap = static_cast<double>(w.files[i].size_blocks);
        report.per_file_ratio.push_back(cap / a.buffers[i]);
        report.per_file_utilization.push_back(a.buffers[i] / cap);
    }
    return report;
}

ComparisonStandards comparison_standards(const Workload& w) {
    ComparisonStandards standards;
    standards.standard_a.reserve(w.files.size());
    for (const auto& f : w.files)
        standards.standard_a.push_back(static_cast<double>(f.size_blocks));
    standards.standard_b.assign(w.files.size(), 1.0);
    return standards;
}

}  // namespace cacheopt
