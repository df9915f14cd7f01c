#include "cacheopt/simulator.hpp"

#include <algorithm>
#include <list>
#include <unordered_map>

namespace cacheopt {

std::string_view interleaving_name(Interleaving interleaving) {
    switch (interleaving) {
        case Interleaving::Concatenated: return "concat";
        case Interleaving::RoundRobinScans: return "round-robin";
    }
    return "unknown";
}

std::optional<Interleaving> interleaving_from_name(std::string_view name) {
    if (name == interleaving_name(Interleaving::Concatenated))
        return Interleaving::Concatenated;
    if (name == interleaving_name(Interleaving::RoundRobinScans))
        return Interleaving::RoundRobinScans;
    return std::nullopt;
}

std::string_view policy_name(FetchPolicy policy) {
    switch (policy) {
        case FetchPolicy::ChunkedSequential: return "chunked";
        case FetchPolicy::LruBlock: return "lru-block";
    }
    return "unknown";
}

std::optional<FetchPolicy> policy_from_name(std::string_view name) {
    if (name == policy_name(FetchPolicy::ChunkedSequential))
        return FetchPolicy::ChunkedSequential;
    if (name == policy_name(FetchPolicy::LruBlock)) return FetchPolicy::LruBlock;
    return std::nullopt;
}

AccessTrace generate_trace(const Workload& w, Interleaving interleaving) {
    AccessTrace trace;
    trace.derivation.interleaving = interleaving;
    for (const FileSpec& f : w.files) trace.derivation.scan_counts.push_back(f.scan_count);

    auto emit_scan = [&](std::size_t i) {
        for (std::int64_t b = 0; b < w.files[i].size_blocks; ++b)
            trace.references.push_back({i, b});
    };

    if (interleaving == Interleaving::Concatenated) {
        for (std::size_t i = 0; i < w.file_count(); ++i)
            for (std::int64_t scan = 0; scan < w.files[i].scan_count; ++scan) emit_scan(i);
        return trace;
    }
    std::vector<std::int64_t> remaining;
    for (const FileSpec& f : w.files) remaining.push_back(f.scan_count);
    bool any = true;
    while (any) {
        any = false;
        for (std::size_t i = 0; i < w.file_count(); ++i) {
            if (remaining[i] == 0) continue;
            emit_scan(i);
            --remaining[i];
            any = true;
        }
    }
    return trace;
}

namespace {

// Per-file buffer state for ChunkedSequential: the half-open block range
// currently resident. A load replaces it wholesale.
struct Chunk {
    std::int64_t begin = 0;
    std::int64_t end = 0;  // empty when begin == end

    bool holds(std::int64_t b) const { return begin <= b && b < end; }
};

// Per-file LRU of individual blocks: recency list (front = most recent)
// plus a block -> list-node index.
struct LruBuffer {
    std::list<std::int64_t> recency;
    std::unordered_map<std::int64_t, std::list<std::int64_t>::iterator> resident;
};

}  // namespace

SimulationResult simulate(const Workload& w, const Allocation& alloc,
                          const AccessTrace& trace, FetchPolicy policy) {
    if (!alloc.integral)
        throw std::invalid_argument("simulation requires an integral allocation");
    auto violations = check_feasible(w, alloc);
    if (!violations.empty()) throw FeasibilityError(std::move(violations));

    const std::size_t count = w.file_count();
    std::vector<std::int64_t> buffers = alloc.as_integers();

    SimulationResult result;
    result.policy = policy;
    result.per_file_calls.assign(count, 0);

    if (policy == FetchPolicy::ChunkedSequential) {
        std::vector<Chunk> chunks(count);
        for (const BlockRef& ref : trace.references) {
            if (ref.file_index >= count ||
                ref.block_index < 0 ||
                ref.block_index >= w.files[ref.file_index].size_blocks)
                throw std::invalid_argument("trace reference outside the workload");
            Chunk& chunk = chunks[ref.file_index];
            if (chunk.holds(ref.block_index)) continue;
            chunk.begin = ref.block_index;
            chunk.end = std::min(ref.block_index + buffers[ref.file_index],
                                 w.files[ref.file_index].size_blocks);
            ++result.per_file_calls[ref.file_index];
            result.blocks_transferred += chunk.end - chunk.begin;
        }
    } else {
        std::vector<LruBuffer> lru(count);
        for (const BlockRef& ref : trace.references) {
            if (ref.file_index >= count ||
                ref.block_index < 0 ||
                ref.block_index >= w.files[ref.file_index].size_blocks)
                throw std::invalid_argument("trace reference outside the workload");
            LruBuffer& buf = lru[ref.file_index];
            auto found = buf.resident.find(ref.block_index);
            if (found != buf.resident.end()) {
                buf.recency.splice(buf.recency.begin(), buf.recency, found->second);
                continue;
            }
            if (static_cast<std::int64_t>(buf.recency.size()) == buffers[ref.file_index]) {
                buf.resident.erase(buf.recency.back());
                buf.recency.pop_back();
            }
            buf.recency.push_front(ref.block_index);
            buf.resident[ref.block_index] = buf.recency.begin();
            ++result.per_file_calls[ref.file_index];
            ++result.blocks_transferred;
        }
    }
    for (std::int64_t calls : result.per_file_calls) result.total_calls += calls;
    return result;
}

CostModelCheck validate_cost_model(const Workload& w, const Allocation& alloc) {
    AccessTrace trace = generate_trace(w, Interleaving::Concatenated);
    SimulationResult sim = simulate(w, alloc, trace, FetchPolicy::ChunkedSequential);

    CostModelCheck check;
    check.simulated_total = sim.total_calls;
    std::vector<std::int64_t> buffers = alloc.as_integers();
    for (std::size_t i = 0; i < w.file_count(); ++i) {
        const FileSpec& f = w.files[i];
        if (buffers[i] == f.size_blocks) {
            ++check.fully_cached_count;
        } else {
            std::int64_t per_scan = (f.size_blocks + buffers[i] - 1) / buffers[i];
            check.predicted_calls += f.scan_count * per_scan;
        }
    }
    if (check.simulated_total != check.predicted_calls + check.fully_cached_count)
        throw std::logic_error("simulated calls disagree with the cost model");
    return check;
}

}  // namespace cacheopt
