#ifndef CACHEOPT_REPORT_HPP
#define CACHEOPT_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string_view>

#include "cacheopt/allocators.hpp"
#include "cacheopt/model.hpp"
#include "cacheopt/oracle.hpp"
#include "cacheopt/simulator.hpp"

// Report documents and their three serializations. Table output targets
// people (6 significant digits); json and csv target machines (full
// precision, stable field order).

namespace cacheopt {

enum class OutputFormat { Table, Json, Csv };

std::string_view format_name(OutputFormat format);
std::optional<OutputFormat> format_from_name(std::string_view name);

struct StrategyReport {
    StrategyKind strategy = StrategyKind::TotalCalls;
    Allocation real_alloc;
    ObjectiveReport real_objectives;
    std::optional<Allocation> int_alloc;
    std::optional<ObjectiveReport> int_objectives;
};

// Runs the strategy on the workload and evaluates the result; rounding is
// included on request.
StrategyReport build_strategy_report(const Workload& w, StrategyKind kind,
                                     bool include_integral);

struct OracleSection {
    Objective objective = Objective::F1;
    double closed_form_value = 0;  // continuous allocation, its own objective
    double rounded_value = 0;
    double oracle_value = 0;
    double absolute_gap = 0;  // rounded_value - oracle_value
    // absolute_gap / max(oracle_value, 1): a zero optimum still yields a
    // finite number.
    double relative_gap = 0;
    std::int64_t instances_enumerated = 0;
    std::int64_t tie_count = 0;
};

struct SimulationSection {
    FetchPolicy policy = FetchPolicy::ChunkedSequential;
    Interleaving interleaving = Interleaving::Concatenated;
    std::vector<std::int64_t> per_file_calls;
    std::int64_t total_calls = 0;
    std::int64_t blocks_transferred = 0;
    std::int64_t predicted_calls = 0;     // sum N_i * ceil(W_i/U_i) * y_i
    std::int64_t fully_cached_count = 0;  // reconciliation term
};

struct ReportDocument {
    Workload workload;
    std::vector<StrategyReport> strategies;
    std::optional<OracleSection> oracle;
    std::optional<SimulationSection> simulation;
};

// csv emits one row per strategy and file with the columns
// strategy,file,buffer_real,buffer_int,ratio,f1,f2,f3,f4; ratio and the
// objective columns describe the real allocation, buffer_int is empty when
// rounding was not requested. Oracle and simulation sections appear in
// table and json output only.
void write_report(const ReportDocument& doc, OutputFormat format, std::ostream& out);

}  // namespace cacheopt

#endif
