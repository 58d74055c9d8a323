#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ssde {

// Runs fn over [0, n) split into contiguous chunks, one per worker. Workers
// write only to disjoint, index-addressed slots, and callers reduce in
// index order afterwards, so results do not depend on the thread count.
// The first exception thrown by any worker is rethrown.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t begin, std::int64_t end)>& fn) {
    if (n <= 0) return;
    if (threads < 1) threads = 1;
    const auto workers = static_cast<std::int64_t>(threads);
    if (workers == 1 || n == 1) {
        fn(0, n);
        return;
    }
    const std::int64_t n_chunks = std::min<std::int64_t>(workers, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_chunks));
    const std::int64_t chunk = (n + n_chunks - 1) / n_chunks;
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        const std::int64_t begin = c * chunk;
        const std::int64_t end = std::min(n, begin + chunk);
        pool.emplace_back([&, c, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace ssde
