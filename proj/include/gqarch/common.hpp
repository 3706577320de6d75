#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace gqarch {

/// Thrown when a mathematical condition required by an operation fails
/// (stationarity, moment, or contraction conditions).
class condition_error : public std::runtime_error {
public:
    explicit condition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a simulated volatility recursion exceeds the overflow guard.
class divergence_error : public std::runtime_error {
public:
    divergence_error(const std::string& what, std::size_t step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Thrown when an iterative solver hits its iteration cap before meeting tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Neumaier-compensated accumulator. Hyperbolically decaying series produce
/// long runs of small terms; plain summation loses several digits there.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// FNV-1a 64-bit hash, used for trajectory/spec fingerprints.
inline std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Parallelism cap: GQARCH_THREADS env var (0 means serial); defaults to
/// hardware concurrency. Aggregations over work items must fold results by
/// index so serial and parallel runs produce identical output.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("GQARCH_THREADS")) {
        const long v = std::atol(env);
        if (v <= 0) return 1;
        return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n). Results must be written to per-index slots;
/// the caller folds them in index order afterwards.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned threads = std::min<std::size_t>(thread_cap(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gqarch
