#pragma once

#include <cstdlib>
#include <future>
#include <vector>

namespace wschur {

// Worker count from WSCHUR_WORKERS; 1 (sequential) when unset or invalid.
inline int worker_count() {
    const char* env = std::getenv("WSCHUR_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

// Applies fn to every item, fanning out across the worker pool in contiguous
// chunks. Results come back in input order, so output is deterministic
// regardless of scheduling.
template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
    using Result = decltype(fn(items.front()));
    const int workers = worker_count();
    std::vector<Result> results;
    results.reserve(items.size());
    if (workers <= 1 || items.size() <= 1) {
        for (const Item& item : items) results.push_back(fn(item));
        return results;
    }
    const std::size_t chunk_count = std::min<std::size_t>(items.size(), workers);
    std::vector<std::future<std::vector<Result>>> futures;
    futures.reserve(chunk_count);
    for (std::size_t c = 0; c < chunk_count; ++c) {
        std::size_t lo = items.size() * c / chunk_count;
        std::size_t hi = items.size() * (c + 1) / chunk_count;
        futures.push_back(std::async(std::launch::async, [&fn, &items, lo, hi] {
            std::vector<Result> part;
            part.reserve(hi - lo);
            for (std::size_t i = lo; i < hi; ++i) part.push_back(fn(items[i]));
            return part;
        }));
    }
    for (auto& f : futures)
        for (Result& r : f.get()) results.push_back(std::move(r));
    return results;
}

} // namespace wschur
