#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace harmonic_zeros {

/// Worker count from HARMONIC_ZEROS_THREADS; 0, unset or unparsable means
/// one worker per hardware thread.
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("HARMONIC_ZEROS_THREADS");
    if (!env || !*env) return hw;
    try {
        const long v = std::stol(env);
        return v > 0 ? static_cast<unsigned>(v) : hw;
    } catch (const std::exception&) {
        return hw;
    }
}

/// Runs body(i) for i in [0, n) on up to `threads` workers. Work items are
/// handed out dynamically; callers write results into per-index slots so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any body is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace harmonic_zeros
