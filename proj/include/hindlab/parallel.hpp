#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace hindlab {

/// Explicit resource limits. Running out is reported as an inconclusive
/// outcome, never as a mathematical verdict.
struct Budget {
    std::uint64_t max_nodes = std::uint64_t{1} << 40;
    std::chrono::milliseconds max_time{std::chrono::minutes(30)};
};

struct SearchOptions {
    unsigned workers = 1;
    Budget budget;
};

namespace detail {

struct SharedSearchState {
    explicit SharedSearchState(const Budget& b)
        : budget(b), start(std::chrono::steady_clock::now()) {}

    Budget budget;
    std::chrono::steady_clock::time_point start;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
};

}  // namespace detail

/// Handed to each task. Call tick() once per search node; when it returns
/// false the task must stop (budget gone, or a lower task already hit).
class TaskContext {
public:
    TaskContext(detail::SharedSearchState& shared, std::size_t task) : shared_(shared), task_(task) {}

    bool tick() {
        ++local_;
        if ((local_ & 1023) != 0) return !stopped_;
        const auto total = shared_.nodes.fetch_add(1024) + 1024;
        if (total > shared_.budget.max_nodes ||
            std::chrono::steady_clock::now() - shared_.start > shared_.budget.max_time) {
            shared_.out_of_budget = true;
        }
        if (shared_.out_of_budget || shared_.best_task.load() < task_) stopped_ = true;
        return !stopped_;
    }

    bool stopped() const noexcept { return stopped_; }
    std::uint64_t nodes() const noexcept { return local_; }

private:
    detail::SharedSearchState& shared_;
    std::size_t task_;
    std::uint64_t local_ = 0;
    bool stopped_ = false;
};

template <class R>
struct FirstHit {
    std::optional<R> result;
    std::optional<std::size_t> task;
    /// Nodes a sequential scan would have visited up to the hit (or in total).
    std::uint64_t nodes = 0;
    bool inconclusive = false;
};

/// Runs tasks 0..n-1 and returns the hit of the lowest-indexed task that has
/// one. Tasks are independent and ordered so that the lowest hit is the
/// canonical (lexicographically least) answer; the outcome and node count do
/// not depend on the number of workers.
template <class R, class Fn>
FirstHit<R> run_first_hit(std::size_t n, const SearchOptions& opts, Fn&& fn) {
    enum class Status : std::uint8_t { pending, completed, hit, aborted };
    detail::SharedSearchState shared(opts.budget);
    std::vector<Status> status(n, Status::pending);
    std::vector<std::uint64_t> counts(n, 0);
    std::vector<std::optional<R>> results(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= n) return;
            if (shared.out_of_budget || shared.best_task.load() < t) {
                status[t] = Status::aborted;
                continue;
            }
            TaskContext ctx(shared, t);
            std::optional<R> r = fn(t, ctx);
            counts[t] = ctx.nodes();
            if (r) {
                results[t] = std::move(r);
                status[t] = Status::hit;
                auto cur = shared.best_task.load();
                while (t < cur && !shared.best_task.compare_exchange_weak(cur, t)) {
                }
            } else {
                status[t] = ctx.stopped() ? Status::aborted : Status::completed;
            }
        }
    };

    const unsigned w = std::max(1u, opts.workers);
    if (w == 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(w, n); ++i) pool.emplace_back(worker);
    }

    FirstHit<R> out;
    for (std::size_t t = 0; t < n; ++t) {
        out.nodes += counts[t];
        if (status[t] == Status::hit) {
            out.result = std::move(results[t]);
            out.task = t;
            return out;
        }
        if (status[t] != Status::completed) {
            out.inconclusive = true;
            return out;
        }
    }
    return out;
}

/// Runs every task and returns their results in task order.
template <class R, class Fn>
std::vector<R> run_all(std::size_t n, unsigned workers, Fn&& fn) {
    std::vector<R> results(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < n;) results[t] = fn(t);
    };
    const unsigned w = std::max(1u, workers);
    if (w == 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(w, n); ++i) pool.emplace_back(worker);
    }
    return results;
}

}  // namespace hindlab
