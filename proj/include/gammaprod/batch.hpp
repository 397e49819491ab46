#pragma once

#include "gammaprod/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gammaprod {

struct CheckTask {
    IdentityId id;
    std::int64_t parameter;
};

/// Every parameter of `id` in [lo, hi] clipped to the identity's domain,
/// ascending.
inline std::vector<CheckTask> tasks_for_range(IdentityId id, std::int64_t lo, std::int64_t hi) {
    const auto dom = parameter_domain(id);
    std::vector<CheckTask> tasks;
    for (std::int64_t p = std::max(lo, dom.min); p <= std::min(hi, dom.max); ++p) tasks.push_back({id, p});
    return tasks;
}

/// Evaluates `tasks` on up to `jobs` threads. Output order matches input
/// order whatever the scheduling; the first exception raised is rethrown.
inline std::vector<VerificationRecord> run_batch(const std::vector<CheckTask>& tasks, const PrecisionContext& ctx,
                                                 unsigned jobs = 1) {
    std::vector<VerificationRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                records[i] = run_check(tasks[i].id, tasks[i].parameter, ctx);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

inline bool all_pass(const std::vector<VerificationRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) { return r.pass; });
}

} // namespace gammaprod
