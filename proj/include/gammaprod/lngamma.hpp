#pragma once

#include "gammaprod/bernoulli.hpp"
#include "gammaprod/bigfloat.hpp"
#include "gammaprod/precision.hpp"
#include "gammaprod/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaprod {

namespace detail {

/// Smallest argument at which the Stirling series is summed directly. The
/// truncation floor behaves like exp(-2 pi z), so z of about p ln2 / (2 pi)
/// reaches 2^-p; 0.12 covers ln2/(2 pi) with margin.
inline long stirling_threshold(int working_bits) {
    return std::max(10L, static_cast<long>(std::ceil(0.12 * working_bits)) + 5);
}

/// Per-precision table of B_{2j} / (2j (2j - 1)) plus (1/2) ln(2 pi).
/// Grown on demand; snapshots handed out are immutable.
class StirlingTable {
public:
    struct Snapshot {
        mpfr_prec_t prec = 0;
        BigFloat half_log_two_pi;
        BigFloat tolerance; // 2^-prec
        std::vector<BigFloat> coeff; // coeff[j - 1] for j >= 1
    };

    static std::shared_ptr<const Snapshot> get(mpfr_prec_t prec, std::size_t min_terms) {
        thread_local std::shared_ptr<const Snapshot> last;
        if (last && last->prec == prec && last->coeff.size() >= min_terms) return last;
        last = get_shared(prec, min_terms);
        return last;
    }

private:
    static std::shared_ptr<const Snapshot> get_shared(mpfr_prec_t prec, std::size_t min_terms) {
        static std::mutex mutex;
        static std::map<mpfr_prec_t, std::shared_ptr<const Snapshot>> tables;

        std::lock_guard lock(mutex);
        auto& slot = tables[prec];
        if (slot && slot->coeff.size() >= min_terms) return slot;

        auto next = std::make_shared<Snapshot>();
        if (slot) {
            *next = *slot;
        } else {
            next->prec = prec;
            next->half_log_two_pi = constants::log_two_pi(prec) / 2L;
            next->tolerance = pow2(-prec, prec);
        }
        const std::size_t target = std::max<std::size_t>(min_terms, 2 * next->coeff.size());
        for (std::size_t j = next->coeff.size() + 1; j <= target; ++j) {
            const long two_j = static_cast<long>(2 * j);
            mpq_class c = bernoulli(two_j) / mpq_class(mpz_class(two_j * (two_j - 1)));
            next->coeff.emplace_back(c, prec);
        }
        slot = next;
        return slot;
    }
};

} // namespace detail

/// ln Gamma(x) for real x > 0, absolute error <= 2^(-prec_bits + 8).
///
/// Shifts x up to z = x + s >= sigma, sums the Stirling expansion at z until a
/// term drops below 2^-(working bits), then removes ln(x (x+1) ... (x+s-1)).
/// The result carries the context's working precision.
inline BigFloat lngamma_stirling(const BigFloat& x, const PrecisionContext& ctx) {
    if (!x.is_finite() || x.sign() <= 0)
        throw std::domain_error("lngamma: argument must be a positive finite real");

    const int w = ctx.working_bits();
    const long sigma = detail::stirling_threshold(w);
    const std::size_t max_terms = static_cast<std::size_t>(4 * sigma);

    BigFloat z(x, w);
    long shift = 0;
    if (z < BigFloat(sigma, w)) {
        const BigFloat gap = BigFloat(sigma, w) - z;
        BigFloat up(w);
        mpfr_ceil(up.raw(), gap.raw());
        shift = mpfr_get_si(up.raw(), MPFR_RNDN);
    }

    // Hot path: in-place MPFR calls on preallocated values.
    BigFloat shift_product(1, w);
    BigFloat factor(w);
    for (long k = 0; k < shift; ++k) {
        mpfr_add_si(factor.raw(), z.raw(), k, MPFR_RNDN);
        mpfr_mul(shift_product.raw(), shift_product.raw(), factor.raw(), MPFR_RNDN);
    }
    mpfr_add_si(z.raw(), z.raw(), shift, MPFR_RNDN);

    auto table = detail::StirlingTable::get(w, 16);

    // (z - 1/2) ln z - z + (1/2) ln 2pi
    BigFloat result(w);
    mpfr_log(result.raw(), z.raw(), MPFR_RNDN);
    mpfr_sub_d(factor.raw(), z.raw(), 0.5, MPFR_RNDN);
    mpfr_mul(result.raw(), result.raw(), factor.raw(), MPFR_RNDN);
    mpfr_sub(result.raw(), result.raw(), z.raw(), MPFR_RNDN);
    mpfr_add(result.raw(), result.raw(), table->half_log_two_pi.raw(), MPFR_RNDN);

    BigFloat power(w);
    mpfr_ui_div(power.raw(), 1, z.raw(), MPFR_RNDN);
    BigFloat inv_sq(w);
    mpfr_sqr(inv_sq.raw(), power.raw(), MPFR_RNDN);

    BigFloat term(w);
    BigFloat previous(w);
    bool converged = false;
    for (std::size_t j = 1; j <= max_terms; ++j) {
        if (j > table->coeff.size()) table = detail::StirlingTable::get(w, 2 * j);
        mpfr_mul(term.raw(), table->coeff[j - 1].raw(), power.raw(), MPFR_RNDN);
        if (j > 1 && mpfr_cmpabs(term.raw(), previous.raw()) >= 0)
            throw std::logic_error("lngamma: Stirling terms grew before reaching tolerance at z = " +
                                   z.to_string(12));
        mpfr_add(result.raw(), result.raw(), term.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(term.raw(), table->tolerance.raw()) < 0) {
            converged = true;
            break;
        }
        mpfr_swap(previous.raw(), term.raw());
        mpfr_mul(power.raw(), power.raw(), inv_sq.raw(), MPFR_RNDN);
    }
    if (!converged) throw std::logic_error("lngamma: Stirling series exceeded its term cap");

    if (shift > 0) result -= log(shift_product);
    return result;
}

/// ln Gamma(r) for a positive rational r.
inline BigFloat lngamma_rational(const Rational& r, const PrecisionContext& ctx) {
    if (r.sign() <= 0) throw std::domain_error("lngamma: argument must be positive, got " + r.to_string());
    return lngamma_stirling(BigFloat(r.value(), ctx.working_bits()), ctx);
}

/// Truncated Weierstrass product for ln Gamma together with its error bound.
struct WeierstrassEstimate {
    BigFloat value;
    BigFloat tail_bound;
};

/// ln Gamma(r) = -gamma r - ln r + sum_{j>=1} (r/j - ln(1 + r/j)), summed
/// through j = terms with the tail estimate r^2 / (2 terms) added. The true
/// value lies within `tail_bound` = r^2 / terms of the returned value.
///
/// Independent low-precision oracle; cost is linear in `terms`.
inline WeierstrassEstimate lngamma_weierstrass(const Rational& r, long terms, const PrecisionContext& ctx) {
    if (r.sign() <= 0 || r > Rational(1, 1))
        throw std::domain_error("lngamma_weierstrass: argument must lie in (0, 1], got " + r.to_string());
    if (terms < 10) throw std::invalid_argument("lngamma_weierstrass: need at least 10 terms");

    const int w = ctx.working_bits();
    const BigFloat z(r.value(), w);

    // sum ln(1 + z/j) = ln prod (1 + z/j); the product stays below (terms+1)^z.
    BigFloat harmonic(w);
    BigFloat product(1, w);
    BigFloat step(w);
    for (long j = 1; j <= terms; ++j) {
        mpfr_set_ui(step.raw(), 1, MPFR_RNDN);
        mpfr_div_ui(step.raw(), step.raw(), static_cast<unsigned long>(j), MPFR_RNDN);
        harmonic += step;
        mpfr_div_ui(step.raw(), z.raw(), static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_add_ui(step.raw(), step.raw(), 1, MPFR_RNDN);
        product *= step;
    }

    const BigFloat z_sq = z * z;
    BigFloat value = -(constants::euler_gamma(w) * z) - log(z) + z * harmonic - log(product);
    value += z_sq / (2L * terms);
    return {std::move(value), z_sq / terms};
}

/// sin(pi r) for any rational r, absolute error <= 2^(-prec_bits + 4).
///
/// r is reduced mod 2 and folded into [0, 1/2] in exact arithmetic before the
/// single floating-point sine evaluation.
inline BigFloat sin_pi_rational(const Rational& r, const PrecisionContext& ctx) {
    const int w = ctx.working_bits();
    const Rational one(1, 1);
    const Rational half(1, 2);

    const mpz_class turns = Rational(mpq_class(r.value() / 2)).floor();
    Rational t = r - Rational(mpz_class(2 * turns), mpz_class(1));
    int sign = 1;
    if (t >= one) {
        t = t - one;
        sign = -1;
    }
    if (t > half) t = one - t;

    if (t.sign() == 0) return BigFloat(w);
    if (t == half) return BigFloat(sign, w);

    BigFloat value = sin(constants::pi(w) * BigFloat(t.value(), w));
    return sign < 0 ? -value : value;
}

} // namespace gammaprod
