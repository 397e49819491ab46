#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gammaprod {

/// Arbitrary-precision binary floating-point real backed by MPFR.
///
/// Every value owns its precision. Binary operators produce a result at the
/// larger of the two operand precisions, rounded to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    BigFloat(const mpz_class& value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    BigFloat(const mpq_class& value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    /// Parses a decimal (or "inf"/"nan") string; throws on malformed input.
    BigFloat(const std::string& text, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("not a decimal number: '" + text + "'");
        }
    }

    /// Copy of `other` rounded to `prec`.
    BigFloat(const BigFloat& other, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    BigFloat(const BigFloat& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& other) noexcept {
        // Leave `other` as a valid minimal-precision zero.
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }

    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; meaningless for zero.
    long exponent() const noexcept { return mpfr_get_exp(v_); }

    BigFloat& operator+=(const BigFloat& o) {
        widen_to(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        widen_to(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        widen_to(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        widen_to(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(long k) {
        mpfr_mul_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(long k) {
        mpfr_div_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, long k) { return a *= k; }
    friend BigFloat operator*(long k, BigFloat a) { return a *= k; }
    friend BigFloat operator/(BigFloat a, long k) { return a /= k; }

    friend BigFloat operator-(BigFloat a) {
        mpfr_neg(a.v_, a.v_, MPFR_RNDN);
        return a;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    /// Scientific notation with `digits` significant digits, round to nearest.
    std::string to_string(int digits) const {
        if (mpfr_zero_p(v_)) return "0";
        if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
        char* buf = nullptr;
        const int len = mpfr_asprintf(&buf, "%.*RNe", std::max(digits, 1) - 1, v_);
        if (len < 0) throw std::runtime_error("mpfr_asprintf failed");
        std::string out(buf, static_cast<std::size_t>(len));
        mpfr_free_str(buf);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
        return os << x.to_string(static_cast<int>(x.precision() * 0.30103));
    }

private:
    void widen_to(const BigFloat& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }

    mpfr_t v_;
};

inline BigFloat abs(BigFloat x) {
    mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat log(BigFloat x) {
    mpfr_log(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat exp(BigFloat x) {
    mpfr_exp(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat sin(BigFloat x) {
    mpfr_sin(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat sqrt(BigFloat x) {
    mpfr_sqrt(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

/// 2^e at the given precision.
inline BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat x(1, prec);
    mpfr_mul_2si(x.raw(), x.raw(), e, MPFR_RNDN);
    return x;
}

inline BigFloat log_of(const mpz_class& n, mpfr_prec_t prec) { return log(BigFloat(n, prec)); }
inline BigFloat log_of(long n, mpfr_prec_t prec) { return log(BigFloat(n, prec)); }

namespace constants {

inline BigFloat pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat log_pi(mpfr_prec_t prec) { return log(pi(prec)); }

inline BigFloat log_two(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_log2(x.raw(), MPFR_RNDN);
    return x;
}

inline BigFloat log_two_pi(mpfr_prec_t prec) { return log(pi(prec) * 2L); }

inline BigFloat euler_gamma(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_euler(x.raw(), MPFR_RNDN);
    return x;
}

} // namespace constants

} // namespace gammaprod
