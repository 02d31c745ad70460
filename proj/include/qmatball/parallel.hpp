#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qmatball {

/// Worker count: QMATBALL_THREADS if set to a positive integer, else hardware_concurrency().
int thread_count();

/// Calls fn(chunk, begin, end) over a fixed partition of [0, n) into thread_count() chunks.
/// The partition depends only on n and the thread count, so per-chunk results written by index
/// reduce deterministically. The first exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), std::max<std::size_t>(n, 1));
    const std::size_t step = (n + workers - 1) / std::max<std::size_t>(workers, 1);
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = std::min(n, w * step);
        const std::size_t e = std::min(n, b + step);
        pool.emplace_back([&, w, b, e] {
            try {
                fn(w, b, e);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks() will use for n items.
inline std::size_t chunk_count(std::size_t n) {
    return std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(thread_count()), std::max<std::size_t>(n, 1)));
}

}  // namespace qmatball
