#pragma once

// Minimal fork-join helper. DISCLINATION_QM_THREADS caps the worker count;
// results must be written to preallocated per-index slots so the outcome is
// independent of scheduling.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dqm {

inline int thread_budget() {
    if (const char* env = std::getenv("DISCLINATION_QM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(thread_budget(), std::max(1, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace dqm
