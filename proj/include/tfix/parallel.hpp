#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace tfix {

/// Smallest index in [0, count) for which `pred` holds, evaluated by `threads` workers.
/// Indices above the best hit found so far are skipped, so the result matches a sequential
/// scan. With `deterministic` off the workers stop at the first hit any of them finds.
/// `pred` must be safe to call concurrently.
inline std::optional<std::size_t> parallel_find_first(std::size_t count, int threads,
                                                      const std::function<bool(std::size_t)>& pred,
                                                      bool deterministic = true) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load() || (!deterministic && best.load() != count)) return;
            if (pred(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (best.load() == count) return std::nullopt;
    return best.load();
}

}  // namespace tfix
