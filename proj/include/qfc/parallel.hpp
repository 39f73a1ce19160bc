#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qfc {

/// Worker count: QFC_THREADS caps parallelism, otherwise hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("QFC_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run body(i) for i in [0, n).  Work is split into fixed contiguous chunks,
/// so each index always lands in the same slot of any preallocated output;
/// results are bit-identical for every thread count.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
    const int workers = std::min<std::size_t>(thread_count(), n ? n : 1);
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qfc
