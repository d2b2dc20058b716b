#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace crlab {

// 0 or negative -> hardware concurrency (at least 1).
int resolve_threads(int requested);

// Splits [0, total) into contiguous blocks, one per worker, and merges the
// per-worker results in worker order.  The merged outcome is therefore
// independent of scheduling and of the worker count, provided `merge` is
// associative over adjacent ranges.
template <typename Result, typename Work, typename Merge>
Result parallel_blocks(long long total, int threads, Result init, Work&& work, Merge&& merge) {
    if (total <= 0) return init;
    long long workers = std::min<long long>(resolve_threads(threads), total);
    if (workers <= 1) {
        Result acc = init;
        merge(acc, work(0LL, total));
        return acc;
    }
    std::vector<Result> partial(static_cast<std::size_t>(workers), init);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long long chunk = total / workers;
    const long long rem = total % workers;
    long long begin = 0;
    for (long long w = 0; w < workers; ++w) {
        const long long end = begin + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&partial, &work, w, begin, end] {
            partial[static_cast<std::size_t>(w)] = work(begin, end);
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    Result acc = init;
    for (auto& pr : partial) merge(acc, pr);
    return acc;
}

} // namespace crlab
