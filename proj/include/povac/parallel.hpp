#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace povac {

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items are
/// independent; callers store results by index so merged output does not
/// depend on scheduling.
inline void parallel_for_index(std::int64_t n, int threads,
                               const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    if (threads < 1) threads = 1;
    const int workers = static_cast<int>(
        std::min<std::int64_t>(threads, n));
    if (workers == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::int64_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace povac
