#include "wgqed/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace wgqed {

namespace {
std::atomic<int> g_cap{0};

int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}
}  // namespace

void set_thread_cap(int n) { g_cap.store(n > 0 ? n : 0); }

int thread_cap() {
    int cap = g_cap.load();
    return cap > 0 ? std::min(cap, hardware_threads()) : hardware_threads();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& f) {
    if (n == 0) return;
    const std::size_t min_chunk = 1024;
    int workers = std::min<std::size_t>(thread_cap(), std::max<std::size_t>(1, n / min_chunk));
    if (workers <= 1) {
        f(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t b = std::min(n, static_cast<std::size_t>(w) * chunk);
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&f, b, e] { f(b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace wgqed
