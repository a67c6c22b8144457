#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pathloss {

// Worker-thread cap: PATHLOSS_LAB_THREADS when set, hardware otherwise.
inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PATHLOSS_LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs f(begin, end, chunk_index) over fixed-size chunks of [0, n). The chunk
// grid depends only on n and chunk_size, never on the thread count, so any
// per-chunk results combined in chunk order are deterministic.
template <class F>
void parallel_chunks(std::size_t n, std::size_t chunk_size, F&& f) {
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t chunks = (n + chunk_size - 1) / chunk_size;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(thread_cap(), chunks));
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            f(c * chunk_size, std::min(n, (c + 1) * chunk_size), c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks) return;
            f(c * chunk_size, std::min(n, (c + 1) * chunk_size), c);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace pathloss
