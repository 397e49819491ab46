#pragma once

#include "gammaprod/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaprod {

/// 1 <= k <= n with gcd(k, n) = 1, ascending; [1] for n = 1.
inline std::vector<std::int64_t> coprime_residues(std::int64_t n) {
    if (n < 1) throw std::domain_error("coprime_residues: n must be >= 1, got " + std::to_string(n));
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

inline constexpr std::int64_t kFareyBound = 100000;

/// Reduced fractions strictly inside (0, 1) with denominator <= order.
struct FareySequence {
    std::int64_t order = 0;
    std::vector<Rational> elements;

    std::size_t size() const noexcept { return elements.size(); }
};

namespace detail {

inline void check_farey_order(std::int64_t order) {
    if (order < 2 || order > kFareyBound)
        throw std::domain_error("farey: order must lie in [2, 100000], got " + std::to_string(order));
}

} // namespace detail

/// Streams F_N in increasing order as (numerator, denominator) pairs.
///
/// Next-term recurrence seeded with 0/1, 1/N: for consecutive a/b < c/d the
/// successor is (k c - a)/(k d - b) with k = floor((N + b) / d). The seeds
/// 0/1 and 1/1 are never emitted.
template <typename Visitor>
void for_each_farey(std::int64_t order, Visitor&& visit) {
    detail::check_farey_order(order);
    std::int64_t a = 0, b = 1, c = 1, d = order;
    while (c < d) {
        visit(c, d);
        const std::int64_t k = (order + b) / d;
        const std::int64_t e = k * c - a;
        const std::int64_t f = k * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
    }
}

inline FareySequence farey(std::int64_t order) {
    FareySequence seq{order, {}};
    for_each_farey(order, [&](std::int64_t num, std::int64_t den) { seq.elements.emplace_back(num, den); });
    return seq;
}

/// Quadratic reference: enumerate, reduce, sort, deduplicate.
inline FareySequence farey_bruteforce(std::int64_t order) {
    detail::check_farey_order(order);
    FareySequence seq{order, {}};
    for (std::int64_t n = 2; n <= order; ++n)
        for (std::int64_t k = 1; k < n; ++k) seq.elements.push_back(reduce(k, n));
    std::sort(seq.elements.begin(), seq.elements.end());
    seq.elements.erase(std::unique(seq.elements.begin(), seq.elements.end()), seq.elements.end());
    return seq;
}

} // namespace gammaprod
