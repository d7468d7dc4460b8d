#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace polysum {

// Global worker cap. 0 means hardware concurrency. Set once by the CLI from
// --threads / POWERSUM_THREADS; library callers just read it.
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{0};
    return cap;
}

inline int effective_threads(std::size_t work_items) {
    int cap = thread_cap().load();
    if (cap <= 0) cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
    if (work_items < 4096) return 1;  // not worth spawning
    const std::size_t max_useful = work_items / 2048;
    if (static_cast<std::size_t>(cap) > max_useful)
        cap = static_cast<int>(max_useful > 0 ? max_useful : 1);
    return cap;
}

// Static chunked parallel for. Each index is touched exactly once, so filling
// disjoint slots of a results array is race-free and the output is identical
// for every thread count.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const int threads = effective_threads(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::size_t chunk = (count + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace polysum
