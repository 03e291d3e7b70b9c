#pragma once

// Deterministic fork-join over an index range: the range splits into one
// contiguous chunk per worker, each worker fills its own accumulator, and the
// caller merges accumulators in chunk order. Results cannot depend on the
// number of workers as long as the merge is associative over adjacent chunks.

#include <thread>
#include <vector>

namespace ffspec {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Acc, class Fn>
std::vector<Acc> parallel_map_chunks(long long n, int jobs, Fn fn) {
    int workers = resolve_jobs(jobs);
    if (static_cast<long long>(workers) > n) workers = n > 0 ? static_cast<int>(n) : 1;
    std::vector<Acc> accs(workers);
    if (workers <= 1) {
        fn(0LL, n, accs[0]);
        return accs;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long lo = w * chunk;
        long long hi = std::min(n, lo + chunk);
        threads.emplace_back([&, lo, hi, w] { fn(lo, hi, accs[w]); });
    }
    for (auto& t : threads) t.join();
    return accs;
}

}  // namespace ffspec
