#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fracdecomp {

// Process-wide default worker count. 0 means std::thread::hardware_concurrency().
void set_default_threads(int threads);
int default_threads();

// Resolves 0 to the default and clamps to [1, work_items].
int resolve_threads(int requested, std::size_t work_items);

// Runs f(worker, begin, end) over a static contiguous partition of [0, count).
// Partition depends only on (count, threads), so results merged by worker index are
// reproducible. The first exception by worker index is rethrown.
template <class F>
void parallel_chunks(std::size_t count, int threads, F&& f) {
    int t = resolve_threads(threads, count);
    if (t <= 1) {
        f(0, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(t);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        std::size_t begin = count * w / t;
        std::size_t end = count * (w + 1) / t;
        pool.emplace_back([&, w, begin, end] {
            try {
                f(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace fracdecomp
