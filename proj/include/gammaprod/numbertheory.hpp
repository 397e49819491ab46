#pragma once

#include "gammaprod/bigfloat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammaprod {

/// Prime factorization; primes strictly increasing, exponents >= 1.
struct Factorization {
    struct Term {
        std::uint64_t prime;
        unsigned exponent;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;

    bool empty() const noexcept { return terms.empty(); }

    std::uint64_t reconstruct() const {
        std::uint64_t n = 1;
        for (const auto& t : terms)
            for (unsigned e = 0; e < t.exponent; ++e) n *= t.prime;
        return n;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Exact integer combination sum_p c_p log p, kept sorted by prime with no
/// zero coefficients. The empty vector is log 1.
class LogVector {
public:
    struct Entry {
        std::uint64_t prime;
        std::int64_t coeff;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    LogVector() = default;

    /// c * log p
    static LogVector log_prime(std::uint64_t p, std::int64_t c = 1) {
        LogVector v;
        if (c != 0) v.entries_.push_back({p, c});
        return v;
    }

    static LogVector from_pairs(std::vector<std::pair<std::uint64_t, std::int64_t>> pairs) {
        std::sort(pairs.begin(), pairs.end());
        LogVector v;
        for (const auto& [p, c] : pairs) {
            if (!v.entries_.empty() && v.entries_.back().prime == p)
                v.entries_.back().coeff += c;
            else
                v.entries_.push_back({p, c});
        }
        v.prune();
        return v;
    }

    bool is_zero() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    std::int64_t coeff(std::uint64_t p) const noexcept {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                                   [](const Entry& e, std::uint64_t q) { return e.prime < q; });
        return (it != entries_.end() && it->prime == p) ? it->coeff : 0;
    }

    LogVector& operator+=(const LogVector& o) { return merge(o, 1); }
    LogVector& operator-=(const LogVector& o) { return merge(o, -1); }
    LogVector& operator*=(std::int64_t k) {
        if (k == 0) entries_.clear();
        for (auto& e : entries_) e.coeff *= k;
        return *this;
    }

    friend LogVector operator+(LogVector a, const LogVector& b) { return a += b; }
    friend LogVector operator-(LogVector a, const LogVector& b) { return a -= b; }
    friend LogVector operator-(LogVector a) { return a *= -1; }
    friend LogVector operator*(std::int64_t k, LogVector a) { return a *= k; }

    friend bool operator==(const LogVector&, const LogVector&) = default;

    /// sum c_p log p as a BigFloat.
    BigFloat to_bigfloat(mpfr_prec_t prec) const {
        BigFloat acc(prec);
        for (const auto& e : entries_) {
            BigFloat term = log(BigFloat(mpz_class(static_cast<unsigned long>(e.prime)), prec));
            term *= static_cast<long>(e.coeff);
            acc += term;
        }
        return acc;
    }

    /// prod p^c when every coefficient is non-negative; nullopt otherwise.
    std::optional<mpz_class> exp_integer() const {
        mpz_class result = 1;
        mpz_class power;
        for (const auto& e : entries_) {
            if (e.coeff < 0) return std::nullopt;
            mpz_ui_pow_ui(power.get_mpz_t(), e.prime, static_cast<unsigned long>(e.coeff));
            result *= power;
        }
        return result;
    }

    /// "3*log 2 + log 3"; "0" for the zero vector.
    std::string to_string() const {
        if (entries_.empty()) return "0";
        std::string out;
        for (const auto& e : entries_) {
            std::int64_t c = e.coeff;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (c < 0) c = -c;
            if (c != 1) out += std::to_string(c) + "*";
            out += "log " + std::to_string(e.prime);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LogVector& v) { return os << v.to_string(); }

private:
    LogVector& merge(const LogVector& o, std::int64_t sign) {
        std::vector<Entry> out;
        out.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->prime < b->prime)) {
                out.push_back(*a++);
            } else if (a == entries_.end() || b->prime < a->prime) {
                out.push_back({b->prime, sign * b->coeff});
                ++b;
            } else {
                const std::int64_t c = a->coeff + sign * b->coeff;
                if (c != 0) out.push_back({a->prime, c});
                ++a;
                ++b;
            }
        }
        entries_ = std::move(out);
        return *this;
    }

    void prune() {
        std::erase_if(entries_, [](const Entry& e) { return e.coeff == 0; });
    }

    std::vector<Entry> entries_;
};

namespace detail {

inline std::uint64_t checked_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
    return static_cast<std::uint64_t>(n);
}

} // namespace detail

/// Trial division with a 2-3-5 wheel; n in [1, 2^63).
inline Factorization factorize(std::int64_t n_signed) {
    std::uint64_t n = detail::checked_positive(n_signed, "factorize");
    Factorization f;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.terms.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    static constexpr std::uint64_t kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6}; // from 7
    std::uint64_t p = 7;
    for (std::size_t i = 0; p <= n / p; p += kWheel[i++ & 7]) strip(p);
    if (n > 1) f.terms.push_back({n, 1});
    return f;
}

inline std::int64_t phi(const Factorization& f) {
    std::int64_t result = 1;
    for (const auto& t : f.terms) {
        result *= static_cast<std::int64_t>(t.prime - 1);
        for (unsigned e = 1; e < t.exponent; ++e) result *= static_cast<std::int64_t>(t.prime);
    }
    return result;
}

inline std::int64_t phi(std::int64_t n) { return phi(factorize(n)); }

inline int mobius(const Factorization& f) {
    int result = 1;
    for (const auto& t : f.terms) {
        if (t.exponent > 1) return 0;
        result = -result;
    }
    return result;
}

inline int mobius(std::int64_t n) { return mobius(factorize(n)); }

/// Lambda(n) exactly: log p when n = p^r, otherwise 0.
inline LogVector mangoldt(const Factorization& f) {
    return f.terms.size() == 1 ? LogVector::log_prime(f.terms.front().prime) : LogVector{};
}

inline LogVector mangoldt(std::int64_t n) { return mangoldt(factorize(n)); }

/// log n = sum e_p log p.
inline LogVector log_vector(std::int64_t n) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> pairs;
    for (const auto& t : factorize(n).terms) pairs.emplace_back(t.prime, t.exponent);
    return LogVector::from_pairs(std::move(pairs));
}

inline std::vector<std::int64_t> divisors(const Factorization& f) {
    std::vector<std::int64_t> out{1};
    for (const auto& t : f.terms) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (unsigned e = 1; e <= t.exponent; ++e) {
            pk *= static_cast<std::int64_t>(t.prime);
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

/// sum_{d | n} mu(d) f(n/d) over any abelian group T supporting += and -=.
/// Only squarefree d contribute, so f is called 2^omega(n) times.
template <typename F>
auto mobius_invert(F&& f, std::int64_t n) -> std::decay_t<decltype(f(n))> {
    const Factorization fac = factorize(n);
    const std::size_t k = fac.terms.size();
    using T = std::decay_t<decltype(f(n))>;
    T acc = f(n);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::int64_t d = 1;
        int parity = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                d *= static_cast<std::int64_t>(fac.terms[i].prime);
                ++parity;
            }
        }
        if (parity % 2)
            acc -= f(n / d);
        else
            acc += f(n / d);
    }
    return acc;
}

inline constexpr std::int64_t kLcmBound = 100000;

/// Primes <= n by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_upto(std::int64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(static_cast<std::uint64_t>(i));
        for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

namespace detail {

inline void check_lcm_bound(std::int64_t n, const char* what) {
    if (n < 1 || n > kLcmBound)
        throw std::domain_error(std::string(what) + ": N must lie in [1, 100000], got " + std::to_string(n));
}

} // namespace detail

/// lcm[1..N] by repeated lcm with gcd.
inline mpz_class lcm_upto_iterated(std::int64_t n) {
    detail::check_lcm_bound(n, "lcm_upto");
    mpz_class acc = 1;
    for (std::int64_t k = 2; k <= n; ++k) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    return acc;
}

/// lcm[1..N] = prod_{p <= N} p^floor(log_p N); cross-checked against the
/// iterated-gcd route before returning.
inline mpz_class lcm_upto(std::int64_t n) {
    detail::check_lcm_bound(n, "lcm_upto");
    mpz_class acc = 1;
    for (std::uint64_t p : primes_upto(n)) {
        std::uint64_t pk = p;
        while (pk <= static_cast<std::uint64_t>(n) / p) pk *= p;
        acc *= mpz_class(static_cast<unsigned long>(pk));
    }
    if (acc != lcm_upto_iterated(n)) throw std::logic_error("lcm_upto: prime-power and gcd routes disagree");
    return acc;
}

/// Exponent vector of a positive integer whose prime factors are all <= bound,
/// found by dividing out each prime. Throws if a larger factor remains.
inline LogVector exponent_vector(mpz_class value, std::int64_t bound) {
    if (value <= 0) throw std::domain_error("exponent_vector: value must be positive");
    std::vector<std::pair<std::uint64_t, std::int64_t>> pairs;
    mpz_class p;
    for (std::uint64_t prime : primes_upto(bound)) {
        p = static_cast<unsigned long>(prime);
        const auto e = mpz_remove(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
        if (e) pairs.emplace_back(prime, static_cast<std::int64_t>(e));
    }
    if (value != 1) throw std::domain_error("exponent_vector: prime factor above bound");
    return LogVector::from_pairs(std::move(pairs));
}

/// psi(N) = sum_{n <= N} Lambda(n), exactly.
inline LogVector chebyshev_psi(std::int64_t n) {
    detail::check_lcm_bound(n, "chebyshev_psi");
    LogVector acc;
    for (std::int64_t k = 2; k <= n; ++k) {
        const LogVector term = mangoldt(k);
        if (!term.is_zero()) acc += term;
    }
    return acc;
}

/// Sieved phi, mu and Lambda for 1..n_max. Immutable after construction.
class ArithmeticFunctionTable {
public:
    static constexpr std::int64_t kMaxSize = 1000000;

    explicit ArithmeticFunctionTable(std::int64_t n_max) : n_max_(n_max) {
        if (n_max < 1 || n_max > kMaxSize)
            throw std::domain_error("ArithmeticFunctionTable: n_max must lie in [1, 10^6]");
        const auto size = static_cast<std::size_t>(n_max) + 1;
        phi_.assign(size, 0);
        mu_.assign(size, 1);
        mangoldt_.assign(size, LogVector{});
        std::vector<std::int64_t> smallest(size, 0);
        std::vector<std::int64_t> primes;
        phi_[1] = 1;
        // Linear sieve: each composite is visited once via its smallest prime.
        for (std::int64_t i = 2; i <= n_max; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (smallest[ui] == 0) {
                smallest[ui] = i;
                primes.push_back(i);
                phi_[ui] = i - 1;
                mu_[ui] = -1;
            }
            for (std::int64_t p : primes) {
                if (p > smallest[ui] || i * p > n_max) break;
                const auto ip = static_cast<std::size_t>(i * p);
                smallest[ip] = p;
                if (p == smallest[ui]) {
                    phi_[ip] = phi_[ui] * p;
                    mu_[ip] = 0;
                } else {
                    phi_[ip] = phi_[ui] * (p - 1);
                    mu_[ip] = -mu_[ui];
                }
            }
        }
        for (std::int64_t p : primes)
            for (std::int64_t pk = p; pk <= n_max; pk *= p) {
                mangoldt_[static_cast<std::size_t>(pk)] = LogVector::log_prime(static_cast<std::uint64_t>(p));
                if (pk > n_max / p) break;
            }
    }

    std::int64_t n_max() const noexcept { return n_max_; }
    std::int64_t phi(std::int64_t n) const { return phi_.at(index(n)); }
    int mu(std::int64_t n) const { return mu_.at(index(n)); }
    const LogVector& mangoldt(std::int64_t n) const { return mangoldt_.at(index(n)); }

private:
    std::size_t index(std::int64_t n) const {
        if (n < 1 || n > n_max_) throw std::out_of_range("ArithmeticFunctionTable: index out of range");
        return static_cast<std::size_t>(n);
    }

    std::int64_t n_max_;
    std::vector<std::int64_t> phi_;
    std::vector<int> mu_;
    std::vector<LogVector> mangoldt_;
};

} // namespace gammaprod
