#pragma once

// Deterministic parallel scans over index ranges.  Work is split into
// contiguous chunks handed out in increasing order; a chunk whose start lies
// beyond the best hit found so far is skipped, and running chunks abort once
// they pass it.  Every position below the reported hit is therefore fully
// scanned, so the result is the FIRST hit in scan order regardless of thread
// count.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace scatlab {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

inline unsigned effective_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested == 0) return hw;
    return requested;
}

// Scans [begin, end); pred(i) == true is a hit.  Returns the smallest hit
// position, or nullopt if the whole range is clean.
inline std::optional<uint64_t> parallel_find_first(uint64_t begin, uint64_t end, unsigned threads,
                                                   const std::function<bool(uint64_t)>& pred) {
    threads = effective_threads(threads);
    if (end <= begin) return std::nullopt;
    const uint64_t total = end - begin;
    if (threads <= 1 || total < 4096) {
        for (uint64_t i = begin; i < end; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }

    const uint64_t chunk = std::max<uint64_t>(1024, total / (threads * 64));
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{UINT64_MAX};

    auto worker = [&] {
        for (;;) {
            uint64_t c = next.fetch_add(1);
            uint64_t lo = begin + c * chunk;
            if (lo >= end || lo >= best.load(std::memory_order_relaxed)) return;
            uint64_t hi = std::min(end, lo + chunk);
            for (uint64_t i = lo; i < hi; ++i) {
                if ((i & 0x3ff) == 0 && i >= best.load(std::memory_order_relaxed)) break;
                if (pred(i)) {
                    uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    uint64_t b = best.load();
    if (b == UINT64_MAX) return std::nullopt;
    return b;
}

// Plain parallel sweep with per-thread accumulators merged in chunk order.
template <typename Acc>
inline void parallel_chunks(uint64_t begin, uint64_t end, unsigned threads,
                            const std::function<void(uint64_t, uint64_t, Acc&)>& body,
                            std::vector<Acc>& accs) {
    threads = effective_threads(threads);
    const uint64_t total = end > begin ? end - begin : 0;
    if (threads <= 1 || total < 4096) {
        accs.resize(1);
        body(begin, end, accs[0]);
        return;
    }
    accs.resize(threads);
    std::atomic<uint64_t> next{begin};
    const uint64_t chunk = std::max<uint64_t>(1024, total / (threads * 16));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (;;) {
                uint64_t lo = next.fetch_add(chunk);
                if (lo >= end) return;
                body(lo, std::min(end, lo + chunk), accs[t]);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace scatlab
