#ifndef CACHEOPT_TESTS_SUPPORT_HPP
#define CACHEOPT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cacheopt/model.hpp"

// Shared helpers for the unit and acceptance suites: compact workload
// construction and seeded random instance generators.

namespace cacheopt::testing {

// files = {(W_1, N_1), (W_2, N_2), ...}; names are a, b, c, ...
inline Workload make_workload(const std::vector<std::pair<std::int64_t, std::int64_t>>& files,
                              std::int64_t free_memory) {
    Workload w;
    w.free_memory = free_memory;
    char name = 'a';
    for (auto [size, scans] : files) {
        w.files.push_back({std::string(1, name), size, scans});
        ++name;
    }
    return w;
}

struct InstanceRanges {
    int min_files = 1;
    int max_files = 6;
    std::int64_t min_size = 2;
    std::int64_t max_size = 200;
    std::int64_t min_scans = 1;
    std::int64_t max_scans = 50;
};

// Random workload with V uniform in [H, sum W]; optionally capped.
inline Workload random_workload(std::mt19937_64& rng, const InstanceRanges& r,
                                std::int64_t max_free_memory = 0) {
    std::uniform_int_distribution<int> countd(r.min_files, r.max_files);
    std::uniform_int_distribution<std::int64_t> sized(r.min_size, r.max_size);
    std::uniform_int_distribution<std::int64_t> scand(r.min_scans, r.max_scans);
    int count = countd(rng);
    std::vector<std::pair<std::int64_t, std::int64_t>> files;
    std::int64_t total = 0;
    for (int i = 0; i < count; ++i) {
        std::int64_t size = sized(rng);
        total += size;
        files.push_back({size, scand(rng)});
    }
    std::int64_t hi = max_free_memory > 0 ? std::min(total, max_free_memory) : total;
    hi = std::max<std::int64_t>(hi, count);
    std::uniform_int_distribution<std::int64_t> budgetd(count, hi);
    return make_workload(files, budgetd(rng));
}

// True when the oracle's product guard admits the instance.
inline bool enumerable(const Workload& w, std::int64_t limit = 10'000'000) {
    std::int64_t bound = 1;
    for (const FileSpec& f : w.files) {
        std::int64_t factor = std::min(f.size_blocks, w.free_memory);
        if (bound > limit / factor) return false;
        bound *= factor;
    }
    return true;
}

// Resamples until the instance passes the oracle's product guard.
inline Workload random_enumerable_workload(std::mt19937_64& rng, const InstanceRanges& r,
                                           std::int64_t max_free_memory) {
    for (;;) {
        Workload w = random_workload(rng, r, max_free_memory);
        if (enumerable(w)) return w;
    }
}

// Random integral feasible allocation: start every buffer at one block and
// scatter the remaining budget over files with spare capacity.
inline Allocation random_integral_allocation(std::mt19937_64& rng, const Workload& w) {
    std::vector<std::int64_t> buffers(w.file_count(), 1);
    std::int64_t remaining = w.budget() - static_cast<std::int64_t>(w.file_count());
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < w.file_count(); ++i)
        if (buffers[i] < w.files[i].size_blocks) open.push_back(i);
    while (remaining > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        std::size_t slot = pick(rng);
        std::size_t i = open[slot];
        ++buffers[i];
        --remaining;
        if (buffers[i] == w.files[i].size_blocks) open.erase(open.begin() + slot);
    }
    return Allocation::integers(buffers);
}

}  // namespace cacheopt::testing

#endif
