// parallel.hpp -- deterministic fork/join loop used by the sweep code.
#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cdiff {

/// Thread count: CDIFF_THREADS env var, else hardware concurrency, else 1.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("CDIFF_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [0, count). Work is split into contiguous chunks, one
/// per thread; callers store results by index so the reduction order never
/// depends on the worker count.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = default_thread_count();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = count * t / threads;
        std::size_t hi = count * (t + 1) / threads;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cdiff
