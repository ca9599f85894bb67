#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace reqtrace {

/// Runs fn(i) for i in [0, count) across hardware threads. Each index owns
/// its output slot, so results are bit-identical to a sequential loop.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned max_threads = 0) {
    unsigned workers = max_threads > 0 ? max_threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<unsigned>(count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& thread : threads) thread.join();
}

}  // namespace reqtrace
