#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace conespectra {

// Worker count: CONE_SPECTRA_THREADS caps it, hardware concurrency is the
// default. Always at least 1.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CONE_SPECTRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) return static_cast<unsigned>(v);
        if (v >= static_cast<long>(hw)) return hw;
        return 1;
    }
    return hw;
}

// Runs fn(0..count-1) across the thread budget. Work items must be
// independent; callers keep determinism by writing into per-index slots.
// The first exception thrown by any item is rethrown here.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_budget();
    if (count <= 1 || workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<unsigned>(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    auto body = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace conespectra
