#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gapn {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Blocked parallel loop over [begin, end). Each worker owns a contiguous
// chunk; callers write results into preallocated per-index slots so the
// outcome is schedule-independent.
template <typename Fn>
void parallel_for(std::uint32_t begin, std::uint32_t end, unsigned threads, Fn&& fn)
{
    threads = resolve_threads(threads);
    const std::uint32_t count = end > begin ? end - begin : 0;
    if (threads <= 1 || count < 2) {
        for (std::uint32_t i = begin; i < end; ++i)
            fn(i);
        return;
    }
    if (threads > count)
        threads = count;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint32_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint32_t lo = begin + t * chunk;
        std::uint32_t hi = std::min(end, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint32_t i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace gapn
