#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace turanlab {

/// Worker count used when callers pass 0.
inline int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates fn(i) for i in [0, tasks) on up to `threads` workers and returns
/// the results indexed by i, so any reduction over them is independent of the
/// worker count. The first exception thrown by a task is rethrown.
template <typename Fn>
auto parallel_map(std::size_t tasks, int threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> results(tasks);
    if (threads <= 0) threads = default_threads();
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks; i = next++) {
                    try {
                        results[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace turanlab
