#ifndef DIOBOUND_CONCURRENCY_HPP
#define DIOBOUND_CONCURRENCY_HPP

#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace diobound {

inline unsigned default_worker_count() {
    if (const char* env = std::getenv("DIOBOUND_WORKERS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs task(0..count-1) on a worker pool and feeds the results to
// merge(idx, result) strictly in index order, so aggregation is
// independent of scheduling. Workers stay at most a window ahead of the
// merge frontier to bound buffered results. merge returning false cancels
// the remaining tasks.
template <class R>
inline void run_ordered(std::size_t count, unsigned workers,
                        const std::function<R(std::size_t)>& task,
                        const std::function<bool(std::size_t, R&&)>& merge) {
    if (count == 0) return;
    if (workers < 1) workers = 1;

    std::mutex m;
    std::condition_variable cv;
    std::vector<std::optional<R>> slots(count);
    std::size_t next_task = 0;
    std::size_t merged = 0;
    bool cancelled = false;
    std::exception_ptr failure;
    const std::size_t window = static_cast<std::size_t>(workers) * 4;

    auto worker = [&] {
        while (true) {
            std::size_t idx;
            {
                std::unique_lock lock(m);
                cv.wait(lock, [&] {
                    return cancelled || failure || next_task >= count ||
                           next_task < merged + window;
                });
                if (cancelled || failure || next_task >= count) return;
                idx = next_task++;
            }
            try {
                R r = task(idx);
                {
                    std::lock_guard lock(m);
                    slots[idx] = std::move(r);
                }
                cv.notify_all();
            } catch (...) {
                {
                    std::lock_guard lock(m);
                    if (!failure) failure = std::current_exception();
                }
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

    {
        std::unique_lock lock(m);
        while (merged < count && !failure) {
            cv.wait(lock, [&] { return slots[merged].has_value() || failure; });
            if (failure) break;
            R r = std::move(*slots[merged]);
            slots[merged].reset();
            const std::size_t idx = merged;
            bool keep_going;
            lock.unlock();
            keep_going = merge(idx, std::move(r));
            lock.lock();
            ++merged;
            if (!keep_going) {
                cancelled = true;
                break;
            }
            cv.notify_all();
        }
        cancelled = cancelled || merged >= count || failure != nullptr;
    }
    cv.notify_all();
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace diobound

#endif
