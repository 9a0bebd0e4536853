#include "gammasg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gammasg {

unsigned thread_count() {
    static const unsigned cached = [] {
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        if (const char* env = std::getenv("GAMMASG_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) hw = std::min<long>(v, hw) > 0 ? static_cast<unsigned>(std::min<long>(v, hw)) : 1u;
        }
        return hw;
    }();
    return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = thread_count();
    if (n == 0) return;
    if (workers <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true))
                    first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(spawn - 1);
    for (unsigned w = 1; w < spawn; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gammasg
