#pragma once

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaprod {

/// Exact even-index Bernoulli numbers B_2, B_4, ... (convention B_1 = -1/2).
///
/// Entries are produced on demand by the defining recurrence
/// sum_{k=0}^{m} C(m+1, k) B_k = 0 restricted to even m, and are immutable once
/// stored. Safe for concurrent callers.
class BernoulliCache {
public:
    /// B_{two_j}; two_j must be even and >= 2.
    mpq_class get(long two_j) {
        if (two_j < 2 || two_j % 2 != 0)
            throw std::domain_error("bernoulli: index must be even and >= 2, got " + std::to_string(two_j));
        const auto j = static_cast<std::size_t>(two_j / 2);
        std::lock_guard lock(mutex_);
        extend_to(j);
        return even_[j];
    }

    /// Process-wide instance.
    static BernoulliCache& shared() {
        static BernoulliCache cache;
        return cache;
    }

private:
    // even_[i] = B_{2i}
    void extend_to(std::size_t j) {
        if (even_.empty()) even_.emplace_back(1);
        mpz_class binom;
        for (std::size_t m = even_.size(); m <= j; ++m) {
            const unsigned long top = 2 * m + 1;
            // sum_{i<m} C(2m+1, 2i) B_{2i} + C(2m+1, 1) B_1 + C(2m+1, 2m) B_{2m} = 0
            mpq_class acc(-mpq_class(mpz_class(top), mpz_class(2)));
            for (std::size_t i = 0; i < m; ++i) {
                mpz_bin_uiui(binom.get_mpz_t(), top, 2 * i);
                acc += mpq_class(binom) * even_[i];
            }
            mpq_class b = -acc / mpq_class(top);
            b.canonicalize();
            even_.push_back(std::move(b));
        }
    }

    std::mutex mutex_;
    std::vector<mpq_class> even_;
};

inline mpq_class bernoulli(long two_j) { return BernoulliCache::shared().get(two_j); }

} // namespace gammaprod
