#ifndef APXALG_PARALLEL_HPP
#define APXALG_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace apxalg {

// Runs fn(i) for every i in [begin, end).  With threads > 1 the range is
// split into contiguous chunks, one worker per chunk; fn must only write to
// caller-owned slots indexed by i, which makes the result identical to the
// sequential order by construction.  The first worker exception is rethrown.
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                         const std::function<void(std::uint64_t)>& fn) {
    if (end <= begin) return;
    const std::uint64_t span = end - begin;
    if (threads <= 1 || span < 2) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, span));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + span * w / workers;
        const std::uint64_t hi = begin + span * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn, &first_error, &error_mutex] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> hold(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace apxalg

#endif
