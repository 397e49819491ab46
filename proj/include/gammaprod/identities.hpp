#pragma once

#include "gammaprod/bigfloat.hpp"
#include "gammaprod/cyclotomic.hpp"
#include "gammaprod/lngamma.hpp"
#include "gammaprod/numbertheory.hpp"
#include "gammaprod/precision.hpp"
#include "gammaprod/rational.hpp"
#include "gammaprod/sequences.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gammaprod {

enum class IdentityId {
    eq1,
    theorem1_direct,
    theorem1_inversion,
    midpoint,
    farey_product,
    psi_lcm,
    sine_lcm,
    sine_cyclotomic,
    geometric_mean,
};

inline constexpr std::array<IdentityId, 9> kIdentityCatalog = {
    IdentityId::eq1,           IdentityId::theorem1_direct, IdentityId::theorem1_inversion,
    IdentityId::midpoint,      IdentityId::farey_product,   IdentityId::psi_lcm,
    IdentityId::sine_lcm,      IdentityId::sine_cyclotomic, IdentityId::geometric_mean,
};

inline std::string_view to_string(IdentityId id) {
    switch (id) {
    case IdentityId::eq1: return "eq1";
    case IdentityId::theorem1_direct: return "theorem1_direct";
    case IdentityId::theorem1_inversion: return "theorem1_inversion";
    case IdentityId::midpoint: return "midpoint";
    case IdentityId::farey_product: return "farey_product";
    case IdentityId::psi_lcm: return "psi_lcm";
    case IdentityId::sine_lcm: return "sine_lcm";
    case IdentityId::sine_cyclotomic: return "sine_cyclotomic";
    case IdentityId::geometric_mean: return "geometric_mean";
    }
    return "unknown";
}

inline std::optional<IdentityId> parse_identity(std::string_view name) {
    for (IdentityId id : kIdentityCatalog)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

/// Which range an identity's parameter is drawn from: a denominator n, or a
/// Farey order N.
enum class ParameterKind { denominator, order };

struct ParameterDomain {
    ParameterKind kind;
    std::int64_t min;
    std::int64_t max;
};

inline constexpr std::int64_t kDenominatorCap = 512;
inline constexpr std::int64_t kFareyOrderCap = 300;
inline constexpr std::int64_t kGeometricMeanCap = 10000;

inline ParameterDomain parameter_domain(IdentityId id) {
    switch (id) {
    case IdentityId::eq1:
    case IdentityId::midpoint: return {ParameterKind::denominator, 1, kDenominatorCap};
    case IdentityId::theorem1_direct:
    case IdentityId::theorem1_inversion:
    case IdentityId::sine_cyclotomic: return {ParameterKind::denominator, 2, kDenominatorCap};
    case IdentityId::geometric_mean: return {ParameterKind::denominator, 1, kGeometricMeanCap};
    case IdentityId::farey_product:
    case IdentityId::sine_lcm: return {ParameterKind::order, 2, kFareyOrderCap};
    case IdentityId::psi_lcm: return {ParameterKind::order, 1, kLcmBound};
    }
    throw std::logic_error("parameter_domain: unknown identity");
}

/// One identity evaluation. Numbers are carried as decimal strings so that
/// reports compare identically across platforms.
struct VerificationRecord {
    IdentityId identity_id = IdentityId::eq1;
    std::int64_t parameter = 0;
    int prec_bits = 0;
    std::string lhs;
    std::string rhs;
    std::string abs_err;
    std::string rel_err;
    bool pass = false;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// terms * 2^(-prec_bits + 16): linear accumulation over `terms` summands.
inline BigFloat tolerance(int prec_bits, std::int64_t terms, mpfr_prec_t prec) {
    BigFloat tol = pow2(-prec_bits + 16, prec);
    tol *= static_cast<long>(std::max<std::int64_t>(terms, 1));
    return tol;
}

namespace detail {

inline constexpr int kErrorDigits = 8;

inline void check_parameter(IdentityId id, std::int64_t value) {
    const auto dom = parameter_domain(id);
    if (value < dom.min || value > dom.max)
        throw std::domain_error(std::string(to_string(id)) + ": parameter must lie in [" + std::to_string(dom.min) +
                                ", " + std::to_string(dom.max) + "], got " + std::to_string(value));
}

class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationRecord make_record(IdentityId id, std::int64_t parameter, const PrecisionContext& ctx,
                                      const BigFloat& lhs, const BigFloat& rhs, const BigFloat& abs_err,
                                      std::int64_t terms, bool exact_ok, const Stopwatch& clock) {
    const int w = ctx.working_bits();
    const BigFloat rel_err = rhs.is_zero() ? abs_err : abs_err / abs(rhs);
    VerificationRecord rec;
    rec.identity_id = id;
    rec.parameter = parameter;
    rec.prec_bits = ctx.prec_bits();
    rec.lhs = lhs.to_string(ctx.decimal_digits());
    rec.rhs = rhs.to_string(ctx.decimal_digits());
    rec.abs_err = abs_err.to_string(kErrorDigits);
    rec.rel_err = rel_err.to_string(kErrorDigits);
    rec.pass = exact_ok && abs_err <= tolerance(ctx.prec_bits(), terms, w);
    rec.elapsed_ms = clock.elapsed_ms();
    return rec;
}

inline VerificationRecord make_record(IdentityId id, std::int64_t parameter, const PrecisionContext& ctx,
                                      const BigFloat& lhs, const BigFloat& rhs, std::int64_t terms,
                                      const Stopwatch& clock) {
    return make_record(id, parameter, ctx, lhs, rhs, abs(lhs - rhs), terms, true, clock);
}

/// sum_{1 <= k <= n, gcd(k, n) = 1} ln Gamma(k/n), with the number of terms.
inline std::pair<BigFloat, std::int64_t> coprime_lngamma_sum(std::int64_t n, const PrecisionContext& ctx) {
    BigFloat sum(ctx.working_bits());
    std::int64_t count = 0;
    for (std::int64_t k : coprime_residues(n)) {
        sum += lngamma_rational(reduce(k, n), ctx);
        ++count;
    }
    return {std::move(sum), count};
}

/// sum_{k=1}^{n} ln Gamma((2k - 1) / (2n))
inline BigFloat midpoint_lngamma_sum(std::int64_t n, const PrecisionContext& ctx) {
    BigFloat sum(ctx.working_bits());
    for (std::int64_t k = 1; k <= n; ++k) sum += lngamma_rational(reduce(2 * k - 1, 2 * n), ctx);
    return sum;
}

/// F(n) = ((n - 1)/2) ln 2pi - (1/2) ln n, the closed form of the full product.
inline BigFloat full_product_log(std::int64_t n, const BigFloat& log_two_pi) {
    const mpfr_prec_t w = log_two_pi.precision();
    return (log_two_pi * static_cast<long>(n - 1) - log_of(static_cast<long>(n), w)) / 2L;
}

} // namespace detail

/// prod_{k=1}^{n} Gamma(k/n) = (2 pi)^((n-1)/2) n^(-1/2), in logs.
inline VerificationRecord eq1_check(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::eq1, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    BigFloat lhs(w);
    for (std::int64_t k = 1; k <= n; ++k) lhs += lngamma_rational(reduce(k, n), ctx);
    const BigFloat rhs = detail::full_product_log(n, constants::log_two_pi(w));
    return detail::make_record(IdentityId::eq1, n, ctx, lhs, rhs, n, clock);
}

/// Product over reduced fractions k/n against (phi(n)/2) ln 2pi - Lambda(n)/2.
inline VerificationRecord theorem1_direct(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::theorem1_direct, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const Factorization fac = factorize(n);
    auto [lhs, terms] = detail::coprime_lngamma_sum(n, ctx);
    const BigFloat rhs = (constants::log_two_pi(w) * static_cast<long>(phi(fac)) - mangoldt(fac).to_bigfloat(w)) / 2L;
    return detail::make_record(IdentityId::theorem1_direct, n, ctx, lhs, rhs, terms, clock);
}

/// R(n) = sum_{d | n} mu(d) F(n/d) from the closed-form F alone (no Gamma
/// evaluations). Recorded lhs is R(n), rhs the closed form; abs_err is the
/// larger of |R - closed form| and |R - direct coprime sum|.
inline VerificationRecord theorem1_inversion(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::theorem1_inversion, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const BigFloat log_two_pi = constants::log_two_pi(w);
    const Factorization fac = factorize(n);

    const BigFloat inverted =
        mobius_invert([&](std::int64_t d) { return detail::full_product_log(d, log_two_pi); }, n);
    const BigFloat closed = (log_two_pi * static_cast<long>(phi(fac)) - mangoldt(fac).to_bigfloat(w)) / 2L;
    auto [direct, terms] = detail::coprime_lngamma_sum(n, ctx);

    const BigFloat err = max(abs(inverted - closed), abs(inverted - direct));
    return detail::make_record(IdentityId::theorem1_inversion, n, ctx, inverted, closed, err, terms, true, clock);
}

/// prod_{k=1}^{n} Gamma((2k-1)/(2n)) = (2 pi)^(n/2) / sqrt 2, in logs.
inline VerificationRecord midpoint_check(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::midpoint, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const BigFloat lhs = detail::midpoint_lngamma_sum(n, ctx);
    const BigFloat rhs = (constants::log_two_pi(w) * static_cast<long>(n) - constants::log_two(w)) / 2L;
    return detail::make_record(IdentityId::midpoint, n, ctx, lhs, rhs, n, clock);
}

/// Midpoint Riemann mean of ln Gamma on (0, 1] minus (1/2) ln 2pi, against
/// its exact value -(ln 2)/(2n).
inline VerificationRecord geometric_mean_check(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::geometric_mean, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const BigFloat lhs = detail::midpoint_lngamma_sum(n, ctx) / static_cast<long>(n) - constants::log_two_pi(w) / 2L;
    const BigFloat rhs = -constants::log_two(w) / static_cast<long>(2 * n);
    return detail::make_record(IdentityId::geometric_mean, n, ctx, lhs, rhs, n, clock);
}

/// sum_{r in F_N} (ln Gamma(r) - (1/2) ln 2pi) = -(1/2) psi(N).
///
/// psi(N) must first equal the exponent vector of lcm[1..N] exactly; the
/// record fails if it does not.
inline VerificationRecord farey_product_check(std::int64_t order, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::farey_product, order);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const LogVector psi = chebyshev_psi(order);
    const bool exact_ok = psi == exponent_vector(lcm_upto(order), order);

    BigFloat lhs(w);
    std::int64_t terms = 0;
    for_each_farey(order, [&](std::int64_t num, std::int64_t den) {
        lhs += lngamma_rational(Rational(num, den), ctx);
        ++terms;
    });
    lhs -= constants::log_two_pi(w) * static_cast<long>(terms) / 2L;
    const BigFloat rhs = -psi.to_bigfloat(w) / 2L;
    return detail::make_record(IdentityId::farey_product, order, ctx, lhs, rhs, abs(lhs - rhs), terms, exact_ok,
                               clock);
}

/// sum_{n <= N} Lambda(n) = log lcm[1..N], decided exactly on exponent
/// vectors. lhs is log lcm, rhs the rendered psi(N).
inline VerificationRecord psi_lcm_check(std::int64_t order, const PrecisionContext& ctx = PrecisionContext{}) {
    detail::check_parameter(IdentityId::psi_lcm, order);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const mpz_class lcm = lcm_upto(order);
    const LogVector psi = chebyshev_psi(order);
    const bool exact_ok = psi == exponent_vector(lcm, order);
    const BigFloat lhs = log_of(lcm, w);
    const BigFloat rhs = psi.to_bigfloat(w);
    const BigFloat err = exact_ok ? BigFloat(w) : abs(lhs - rhs);
    return detail::make_record(IdentityId::psi_lcm, order, ctx, lhs, rhs, err, 1, exact_ok, clock);
}

/// log lcm[1..N] = -ln 2 + 2 sum_{r in F_N, r <= 1/2} ln(2 sin(pi r)).
inline VerificationRecord sine_lcm_check(std::int64_t order, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::sine_lcm, order);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const BigFloat log_two = constants::log_two(w);
    const BigFloat lhs = log_of(lcm_upto(order), w);

    BigFloat sum(w);
    std::int64_t terms = 0;
    for_each_farey(order, [&](std::int64_t num, std::int64_t den) {
        if (2 * num > den) return;
        sum += log_two + log(sin_pi_rational(Rational(num, den), ctx));
        ++terms;
    });
    const BigFloat rhs = sum * 2L - log_two;
    return detail::make_record(IdentityId::sine_lcm, order, ctx, lhs, rhs, 2 * terms, clock);
}

/// prod_{k coprime to n} 2 sin(pi k/n) = Phi_n(1), with Phi_n(1) also
/// required to equal exp(Lambda(n)) exactly. A second residual ties the sine
/// product back to the Gamma product through the reflection formula:
/// 2 R(n) = phi(n) (ln pi + ln 2) - sum ln(2 sin(pi k/n)).
inline VerificationRecord sine_cyclotomic_check(std::int64_t n, const PrecisionContext& ctx) {
    detail::check_parameter(IdentityId::sine_cyclotomic, n);
    detail::Stopwatch clock;
    const int w = ctx.working_bits();
    const BigFloat log_two = constants::log_two(w);
    const Factorization fac = factorize(n);
    const mpz_class at_one = cyclotomic_at_one(n);
    const auto lambda_exp = mangoldt(fac).exp_integer();
    const bool exact_ok = lambda_exp && *lambda_exp == at_one;

    BigFloat log_sine_sum(w);
    for (std::int64_t k : coprime_residues(n)) log_sine_sum += log_two + log(sin_pi_rational(reduce(k, n), ctx));
    const BigFloat rhs = log_of(at_one, w);

    auto [gamma_sum, terms] = detail::coprime_lngamma_sum(n, ctx);
    const BigFloat reflected =
        (constants::log_pi(w) + log_two) * static_cast<long>(phi(fac)) - log_sine_sum;
    const BigFloat err = max(abs(log_sine_sum - rhs), abs(gamma_sum * 2L - reflected));
    return detail::make_record(IdentityId::sine_cyclotomic, n, ctx, log_sine_sum, rhs, err, 2 * terms, exact_ok,
                               clock);
}

/// Runs the catalog entry `id` at `parameter`.
inline VerificationRecord run_check(IdentityId id, std::int64_t parameter, const PrecisionContext& ctx) {
    switch (id) {
    case IdentityId::eq1: return eq1_check(parameter, ctx);
    case IdentityId::theorem1_direct: return theorem1_direct(parameter, ctx);
    case IdentityId::theorem1_inversion: return theorem1_inversion(parameter, ctx);
    case IdentityId::midpoint: return midpoint_check(parameter, ctx);
    case IdentityId::farey_product: return farey_product_check(parameter, ctx);
    case IdentityId::psi_lcm: return psi_lcm_check(parameter, ctx);
    case IdentityId::sine_lcm: return sine_lcm_check(parameter, ctx);
    case IdentityId::sine_cyclotomic: return sine_cyclotomic_check(parameter, ctx);
    case IdentityId::geometric_mean: return geometric_mean_check(parameter, ctx);
    }
    throw std::logic_error("run_check: unknown identity");
}

} // namespace gammaprod
