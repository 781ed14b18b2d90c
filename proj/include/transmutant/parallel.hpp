#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace transmutant {

/// Number of worker threads, capped by the TRANSMUTANT_THREADS environment variable.
inline int thread_budget() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("TRANSMUTANT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

/// Runs body(i) for i in [0, count). Rows are disjoint, so the result does not
/// depend on the thread count.
template <typename Body>
void parallel_for(int count, Body&& body) {
    int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace transmutant
