#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace dfun::detail {

// Splits [0, n) into contiguous chunks, one per hardware thread. fn(begin, end)
// must only write to disjoint outputs.
template <class Fn>
void parallel_for(std::size_t n, std::size_t min_chunk, Fn&& fn) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

} // namespace dfun::detail
