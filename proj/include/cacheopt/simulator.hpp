#ifndef CACHEOPT_SIMULATOR_HPP
#define CACHEOPT_SIMULATOR_HPP

#include <optional>
#include <string_view>

#include "cacheopt/model.hpp"

// Block-level two-level memory simulator. Each file owns a private buffer
// of U_i blocks; the simulator counts actual external-memory calls for a
// scan workload and reconciles them against the W_i/U_i cost model.

namespace cacheopt {

// Scan order across files: all scans of file 1 then file 2 ..., or one
// full scan per file per round until every file has its N_i scans.
enum class Interleaving { Concatenated, RoundRobinScans };

// ChunkedSequential: a miss at block b costs one call loading blocks
// b .. min(b+U_i-1, W_i-1) and replaces the buffer's whole content.
// LruBlock: a miss costs one call for exactly the missed block, evicting
// the least-recently-used resident block when the buffer is full.
enum class FetchPolicy { ChunkedSequential, LruBlock };

std::string_view interleaving_name(Interleaving interleaving);
std::optional<Interleaving> interleaving_from_name(std::string_view name);
std::string_view policy_name(FetchPolicy policy);
std::optional<FetchPolicy> policy_from_name(std::string_view name);

struct BlockRef {
    std::size_t file_index = 0;
    std::int64_t block_index = 0;  // 0 .. W_i - 1

    bool operator==(const BlockRef&) const = default;
};

struct TraceDerivation {
    Interleaving interleaving = Interleaving::Concatenated;
    std::vector<std::int64_t> scan_counts;  // N_i per file, workload order
};

struct AccessTrace {
    std::vector<BlockRef> references;
    TraceDerivation derivation;
};

// Sequential full-file scans, file i exactly N_i times; total length is
// sum N_i * W_i.
AccessTrace generate_trace(const Workload& w, Interleaving interleaving);

struct SimulationResult {
    std::vector<std::int64_t> per_file_calls;
    std::int64_t total_calls = 0;
    FetchPolicy policy = FetchPolicy::ChunkedSequential;
    std::int64_t blocks_transferred = 0;
};

// Replays the trace against per-file buffers sized by `alloc`, which must
// be integral and feasible. Buffers start empty.
SimulationResult simulate(const Workload& w, const Allocation& alloc,
                          const AccessTrace& trace, FetchPolicy policy);

struct CostModelCheck {
    std::int64_t simulated_total = 0;
    // sum N_i * ceil(W_i/U_i) over files with U_i < W_i.
    std::int64_t predicted_calls = 0;
    // Files with U_i = W_i; each pays one initial load the y_i = 0 term
    // in the cost model discards.
    std::int64_t fully_cached_count = 0;
};

// Runs a ChunkedSequential simulation over the concatenated trace and
// checks simulated_total = predicted_calls + fully_cached_count.
CostModelCheck validate_cost_model(const Workload& w, const Allocation& alloc);

}  // namespace cacheopt

#endif
