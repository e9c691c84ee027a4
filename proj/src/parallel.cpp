#include "anderson/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace anderson {

int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ANDERSON_LAB_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < hw) hw = cap;
        } catch (const std::exception&) {
            // Unparseable cap: ignore and use hardware concurrency.
        }
    }
    return hw;
}

void parallel_chunks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& body,
                     int threads) {
    if (count <= 0) return;
    if (threads <= 0) threads = max_threads();
    if (threads > count) threads = static_cast<int>(count);
    if (threads == 1) {
        body(0, count);
        return;
    }

    const std::int64_t block = std::max<std::int64_t>(1, count / (8 * threads));
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mutex;

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::int64_t lo = next.fetch_add(block);
            if (lo >= count) return;
            const std::int64_t hi = std::min(lo + block, count);
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body,
                  int threads) {
    parallel_chunks(
        count,
        [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        },
        threads);
}

}  // namespace anderson
