#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace boxdim {

// Run `body(chunkIndex, begin, end)` over [0, n) split into at most
// `numThreads` contiguous chunks.
//
// The chunk boundaries depend only on (n, numThreads is capped by n),
// and every call site writes results into per-chunk or per-index slots
// that are merged in chunk order afterwards. That is what keeps every
// numeric output of the library independent of the worker count: the
// thread count decides wall time only, never which values come out.
template <typename Body>
void parallelChunks(int numThreads, std::size_t n, Body&& body) {
    if (n == 0) return;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(
                                     std::max(1, numThreads)),
                                 n));
    if (workers == 1) {
        body(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

// Number of chunks parallelChunks() will actually use for (numThreads, n).
inline std::size_t chunkCount(int numThreads, std::size_t n) {
    if (n == 0) return 0;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(
                                     std::max(1, numThreads)),
                                 n));
    const std::size_t chunk = (n + workers - 1) / workers;
    return (n + chunk - 1) / chunk;
}

} // namespace boxdim
