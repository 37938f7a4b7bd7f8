#pragma once

// Bounded internal parallelism.  HOMSEC_THREADS (a positive integer) caps
// the worker count; results are merged by index so the outcome never
// depends on the schedule.

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace homsec {

inline int thread_budget() {
    if (const char* env = std::getenv("HOMSEC_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested >= 1) return requested;
        } catch (...) {
            // unparsable values fall back to the hardware count
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// fn(i) for every i in [0, count), strided across the workers.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    const int workers = thread_budget();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&fn, w, workers, count] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count;
                 i += static_cast<std::size_t>(workers))
                fn(i);
        });
    for (std::thread& t : pool) t.join();
}

}  // namespace homsec
