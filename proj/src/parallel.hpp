#pragma once

#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace pqcurves::detail {

// Applies fn to every item, possibly on several threads; results land in
// input order so callers stay deterministic.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F fn)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    const size_t n = items.size();
    std::vector<R> out(n);
    unsigned workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        futures.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next++; i < n; i = next++) out[i] = fn(items[i]);
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

}  // namespace pqcurves::detail
