#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace qprime {

/// Worker-count knob for the counting loops. 0 means "resolve from the
/// QPRIME_WORKERS env var, else hardware_concurrency".
struct ParallelConfig {
    unsigned workers = 0;
};

unsigned resolve_workers(const ParallelConfig& cfg);

/// Splits [begin, end) into fixed-size chunks, evaluates per_chunk(lo, hi)
/// on a pool, and folds the results in ascending chunk order. Chunk
/// boundaries do not depend on the worker count, so results are identical
/// for any number of workers (the reduction order is fixed even for
/// non-associative combines such as float sums).
template <class T, class ChunkFn, class CombineFn>
T chunked_reduce(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk_size,
                 const ParallelConfig& cfg, T init, ChunkFn per_chunk, CombineFn combine) {
    if (end <= begin) return init;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t span = end - begin;
    const std::uint64_t n_chunks = (span + chunk_size - 1) / chunk_size;
    unsigned workers = resolve_workers(cfg);
    if (workers > n_chunks) workers = static_cast<unsigned>(n_chunks);

    if (workers <= 1) {
        T acc = init;
        for (std::uint64_t k = 0; k < n_chunks; ++k) {
            std::uint64_t lo = begin + k * chunk_size;
            std::uint64_t hi = std::min(end, lo + chunk_size);
            acc = combine(std::move(acc), per_chunk(lo, hi));
        }
        return acc;
    }

    std::vector<T> results(n_chunks, init);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t k = next.fetch_add(1);
                if (k >= n_chunks) return;
                std::uint64_t lo = begin + k * chunk_size;
                std::uint64_t hi = std::min(end, lo + chunk_size);
                results[k] = per_chunk(lo, hi);
            }
        });
    }
    for (auto& t : pool) t.join();

    T acc = init;
    for (std::uint64_t k = 0; k < n_chunks; ++k) acc = combine(std::move(acc), std::move(results[k]));
    return acc;
}

/// Convenience integer-sum reduction.
template <class ChunkFn>
std::uint64_t chunked_sum(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk_size,
                          const ParallelConfig& cfg, ChunkFn per_chunk) {
    return chunked_reduce<std::uint64_t>(begin, end, chunk_size, cfg, 0, per_chunk,
                                         [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

}  // namespace qprime
