#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lonet {

/// Number of workers to use when the caller passes 0.
inline unsigned defaultWorkers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) on up to
/// `workers` threads. Chunk boundaries depend only on `count` and `grain`, so
/// callers writing to disjoint outputs get schedule-independent results.
/// The first exception thrown by any chunk is rethrown.
template <class Fn>
void parallelFor(std::size_t count, unsigned workers, std::size_t grain, Fn&& fn) {
    if (count == 0) {
        return;
    }
    grain = std::max<std::size_t>(grain, 1);
    const std::size_t chunks = (count + grain - 1) / grain;
    workers = std::max(1u, std::min<unsigned>(workers == 0 ? defaultWorkers() : workers,
                                              static_cast<unsigned>(std::min<std::size_t>(chunks, 1024))));
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            fn(c * grain, std::min(count, (c + 1) * grain));
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t c = w; c < chunks; c += workers) {
                    fn(c * grain, std::min(count, (c + 1) * grain));
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace lonet
