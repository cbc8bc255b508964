#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mkc::detail {

inline int resolve_threads(int requested, std::uint64_t work_items) {
    const int t = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(t), std::max<std::uint64_t>(1, work_items)));
}

/// Calls fn(i) for every i in [0, count) on up to `threads` workers (0 = all
/// cores). The first exception thrown by any call is rethrown after all
/// workers finish.
template <class Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& fn) {
    threads = resolve_threads(threads, count);
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace mkc::detail
