#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace w6 {

// Worker count for parallel phases: W6_WORKERS when set to a positive
// integer, otherwise the hardware concurrency, at least 1.
inline int worker_count() {
    if (const char* env = std::getenv("W6_WORKERS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Run fn(i) for every i in [0, count). Work is dealt round-robin to
// worker_count() threads; fn must be safe to call concurrently. Results
// must be written to per-index slots so the outcome is independent of
// scheduling.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

} // namespace w6
