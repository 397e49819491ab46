#pragma once

#include "gammaprod/numbertheory.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaprod {

/// Dense integer polynomial; coeffs[i] multiplies x^i. No trailing zeros, so
/// the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    /// x^n - 1
    static IntPolynomial x_pow_minus_one(std::size_t n) {
        std::vector<mpz_class> c(n + 1);
        c[0] = -1;
        c[n] += 1;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    const mpz_class& operator[](std::size_t i) const { return coeffs_.at(i); }
    const mpz_class& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    mpz_class evaluate(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Descending-degree rendering, e.g. "x^2 - x + 1".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const mpz_class mag = abs(c);
            if (mag != 1 || k == 0) out += mag.get_str();
            if (k >= 1) {
                if (mag != 1) out += "*";
                out += "x";
                if (k >= 2) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpz_class> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a[i] * b[j];
    }
    return IntPolynomial(std::move(out));
}

/// Raised when an exact division leaves a nonzero remainder.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// a / b for monic b dividing a exactly over Z. Throws InexactDivision otherwise.
inline IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (!b.is_monic()) throw std::invalid_argument("poly_divexact: divisor must be monic");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InexactDivision("poly_divexact: divisor degree exceeds dividend degree");

    const std::size_t m = static_cast<std::size_t>(b.degree());
    std::vector<std::size_t> support; // nonzero lower coefficients of b
    for (std::size_t j = 0; j < m; ++j)
        if (b[j] != 0) support.push_back(j);

    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree()) - m + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class& lead = rem[i + m];
        if (lead == 0) continue;
        quot[i] = lead;
        for (std::size_t j : support) mpz_submul(rem[i + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        lead = 0;
    }
    for (std::size_t j = 0; j < m; ++j)
        if (rem[j] != 0) throw InexactDivision("poly_divexact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

inline constexpr std::int64_t kCyclotomicBound = 10000;

namespace detail {

class CyclotomicMemo {
public:
    static CyclotomicMemo& shared() {
        static CyclotomicMemo memo;
        return memo;
    }

    const IntPolynomial* find(std::int64_t n) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(n);
        return it == table_.end() ? nullptr : &it->second;
    }

    // std::map nodes are stable, so the returned reference outlives the lock.
    const IntPolynomial& insert(std::int64_t n, IntPolynomial p) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(n, std::move(p)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::int64_t, IntPolynomial> table_;
};

} // namespace detail

/// Phi_n, monic of degree phi(n), for 1 <= n <= 10^4.
///
/// x^n - 1 = prod_{d | n} Phi_d, so Phi_n is x^n - 1 divided exactly by the
/// lower Phi_d. For a prime p | n the divisors of n/p are grouped into the
/// single sparse factor x^(n/p) - 1; the rest are divided out one at a time.
/// p is chosen to leave the least total degree for the dense divisions.
inline const IntPolynomial& cyclotomic_poly(std::int64_t n) {
    if (n < 1 || n > kCyclotomicBound)
        throw std::domain_error("cyclotomic_poly: n must lie in [1, 10000], got " + std::to_string(n));
    auto& memo = detail::CyclotomicMemo::shared();
    if (const IntPolynomial* hit = memo.find(n)) return *hit;
    if (n == 1) return memo.insert(1, IntPolynomial{-1, 1});

    const Factorization fac = factorize(n);
    std::uint64_t best_prime = 0;
    std::int64_t best_cost = -1;
    for (const auto& t : fac.terms) {
        std::int64_t pv = 1;
        for (unsigned e = 0; e < t.exponent; ++e) pv *= static_cast<std::int64_t>(t.prime);
        const std::int64_t rest = n / pv;
        const std::int64_t cost = (pv / static_cast<std::int64_t>(t.prime)) *
                                  (static_cast<std::int64_t>(t.prime) - 1) * (rest - phi(rest));
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_prime = t.prime;
        }
    }

    const auto p = static_cast<std::int64_t>(best_prime);
    IntPolynomial quotient = poly_divexact(IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n)),
                                           IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n / p)));
    std::int64_t top_power = 1;
    while ((n / top_power) % p == 0) top_power *= p;
    for (std::int64_t d : divisors(fac)) {
        if (d == n || d % top_power != 0) continue;
        quotient = poly_divexact(quotient, cyclotomic_poly(d));
    }
    return memo.insert(n, std::move(quotient));
}

/// Phi_n(1) for n >= 2: p when n is a power of the prime p, else 1.
inline mpz_class cyclotomic_at_one(std::int64_t n) {
    if (n < 2) throw std::domain_error("cyclotomic_at_one: n must be >= 2, got " + std::to_string(n));
    mpz_class sum = 0;
    for (const auto& c : cyclotomic_poly(n).coeffs()) sum += c;
    return sum;
}

} // namespace gammaprod
