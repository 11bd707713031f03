#include "fockop/common.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fockop {

int max_threads() {
    if (const char* env = std::getenv("FOCKOP_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(v > 256 ? 256 : v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t nthreads = static_cast<std::size_t>(max_threads());
    if (n == 0) return;
    if (nthreads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> counter{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = counter.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const std::size_t used = std::min(nthreads, n);
    pool.reserve(used - 1);
    for (std::size_t t = 1; t < used; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace fockop
