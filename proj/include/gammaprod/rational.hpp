#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gammaprod {

/// Exact fraction num/den held in canonical form: gcd(num, den) = 1, den >= 1.
///
/// The sampling points of every product are non-negative, but signed values
/// are representable so that symmetry reductions stay closed.
class Rational {
public:
    Rational() = default;

    Rational(const mpz_class& num, const mpz_class& den) {
        if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(std::int64_t num, std::int64_t den)
        : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "k/n" or "k" in decimal; whitespace is not allowed.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        const std::string num = text.substr(0, slash);
        const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        auto valid = [](const std::string& s) {
            if (s.empty()) return false;
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational '" + text + "'");
        mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
        mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
        return Rational(n, d);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& value() const noexcept { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    /// floor(num/den)
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    std::string to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

/// Canonical k/n; rejects n <= 0.
inline Rational reduce(std::int64_t k, std::int64_t n) {
    if (n <= 0) throw std::domain_error("reduce: denominator must be positive, got " + std::to_string(n));
    return Rational(k, n);
}

} // namespace gammaprod
