#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace foel {

/// Worker cap: FOEL_THREADS when set (min 1), else hardware concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("FOEL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs f(0..count-1) across at most thread_cap() workers. Exceptions from
/// tasks are rethrown (first one wins). Results must be written to
/// pre-sized slots so output order stays deterministic.
inline void parallel_for(int count, const std::function<void(int)>& f) {
    if (count <= 0) return;
    unsigned workers = std::min<unsigned>(thread_cap(), static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next.store(count);  // drain remaining work
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace foel
