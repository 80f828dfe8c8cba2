#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace heckeforge {

/// Index-space map: runs fn(0..n-1), optionally across threads. Callers make
/// results deterministic by writing into preallocated slot i, so the output
/// order never depends on scheduling. The first exception thrown by any
/// worker is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, bool parallel, Fn&& fn) {
    if (!parallel || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(n, hw > 0 ? std::min(hw, 16u) : 4u);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            std::size_t i;
            while ((i = next.fetch_add(1)) < n && !failed.load()) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace heckeforge
