#include "fracdecomp/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace fracdecomp {

namespace {
std::atomic<int> g_threads{0};
}

void set_default_threads(int threads) { g_threads.store(std::max(0, threads)); }

int default_threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    return std::max(1u, std::thread::hardware_concurrency());
}

int resolve_threads(int requested, std::size_t work_items) {
    int t = requested > 0 ? requested : default_threads();
    if (work_items == 0) return 1;
    return static_cast<int>(std::min<std::size_t>(t, work_items));
}

}  // namespace fracdecomp
