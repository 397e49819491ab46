#include "gammaprod/numbertheory.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

namespace gammaprod {
namespace {

std::int64_t phi_bruteforce(std::int64_t n) {
    std::int64_t c = 0;
    for (std::int64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

std::vector<std::int64_t> divisors_bruteforce(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

TEST(Factorize, Examples) {
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(factorize(12).terms, (std::vector<Factorization::Term>{{2, 2}, {3, 1}}));
    EXPECT_EQ(factorize(97).terms, (std::vector<Factorization::Term>{{97, 1}}));
}

TEST(Factorize, ReconstructsAndLargeInputs) {
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const auto f = factorize(n);
        EXPECT_EQ(f.reconstruct(), static_cast<std::uint64_t>(n));
        for (std::size_t i = 1; i < f.terms.size(); ++i) EXPECT_LT(f.terms[i - 1].prime, f.terms[i].prime);
    }
    // 2^61 - 1 is prime; 600851475143 = 71 * 839 * 1471 * 6857
    EXPECT_EQ(factorize(2305843009213693951LL).terms.size(), 1u);
    EXPECT_EQ(factorize(600851475143LL).terms,
              (std::vector<Factorization::Term>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}}));
    EXPECT_EQ(factorize(std::int64_t{1} << 62).terms, (std::vector<Factorization::Term>{{2, 62}}));
}

TEST(Factorize, RejectsNonPositive) {
    EXPECT_THROW(factorize(0), std::domain_error);
    EXPECT_THROW(factorize(-5), std::domain_error);
    EXPECT_THROW(phi(0), std::domain_error);
    EXPECT_THROW(mobius(-1), std::domain_error);
}

TEST(Phi, Examples) {
    EXPECT_EQ(phi(1), 1);
    EXPECT_EQ(phi(12), 4);
    EXPECT_EQ(phi(1024), 512);
    for (std::int64_t n = 1; n <= 300; ++n) EXPECT_EQ(phi(n), phi_bruteforce(n)) << n;
}

TEST(Mobius, Examples) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_EQ(mobius(30), -1);
}

TEST(Mangoldt, Examples) {
    EXPECT_TRUE(mangoldt(1).is_zero());
    EXPECT_EQ(mangoldt(8), LogVector::log_prime(2));
    EXPECT_TRUE(mangoldt(6).is_zero());
    EXPECT_EQ(mangoldt(97), LogVector::log_prime(97));
    const BigFloat rendered = mangoldt(8).to_bigfloat(128);
    EXPECT_EQ(rendered, log(BigFloat(2, 128)));
}

TEST(Divisors, Examples) {
    EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(49), (std::vector<std::int64_t>{1, 7, 49}));
    for (std::int64_t n = 1; n <= 500; ++n) EXPECT_EQ(divisors(n), divisors_bruteforce(n));
}

TEST(LogVector, Arithmetic) {
    const LogVector a = log_vector(12); // 2 log 2 + log 3
    const LogVector b = log_vector(18); // log 2 + 2 log 3
    EXPECT_EQ(a + b, log_vector(216));
    EXPECT_EQ(a - a, LogVector{});
    EXPECT_EQ((a - b).coeff(2), 1);
    EXPECT_EQ((a - b).coeff(3), -1);
    EXPECT_EQ(3 * log_vector(2), log_vector(8));
    EXPECT_EQ(a.to_string(), "2*log 2 + log 3");
    EXPECT_EQ((-a).to_string(), "-2*log 2 - log 3");
    EXPECT_EQ(LogVector{}.to_string(), "0");
    EXPECT_EQ(*log_vector(2520).exp_integer(), 2520);
    EXPECT_FALSE((a - b).exp_integer().has_value());
}

TEST(MobiusInvert, Examples) {
    EXPECT_EQ(mobius_invert([](std::int64_t d) { return d; }, 12), 4);
    EXPECT_EQ(mobius_invert([](std::int64_t) { return std::int64_t{1}; }, 6), 0);
    EXPECT_EQ(mobius_invert([](std::int64_t d) { return log_vector(d); }, 8), LogVector::log_prime(2));
}

TEST(MobiusInvert, PropagatesFailures) {
    auto bad = [](std::int64_t d) -> std::int64_t {
        if (d == 3) throw std::runtime_error("boom");
        return d;
    };
    EXPECT_THROW(mobius_invert(bad, 6), std::runtime_error);
}

// Random g on divisors; f(m) = sum_{d | m} g(d); inversion must give back g(n).
TEST(MobiusInvert, RoundTrip) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(1, 10000);
    std::uniform_int_distribution<std::int64_t> value(-1000000, 1000000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = pick(rng);
        std::map<std::int64_t, std::int64_t> g;
        for (std::int64_t d : divisors(n)) g[d] = value(rng);
        auto f = [&](std::int64_t m) {
            std::int64_t s = 0;
            for (std::int64_t d : divisors(m)) s += g.at(d);
            return s;
        };
        EXPECT_EQ(mobius_invert(f, n), g.at(n)) << "n = " << n;
    }
}

TEST(DivisorSums, ExactUpTo10000) {
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t phi_sum = 0, mu_sum = 0;
        for (std::int64_t d : divisors(n)) {
            phi_sum += phi(d);
            mu_sum += mobius(d);
        }
        ASSERT_EQ(phi_sum, n);
        ASSERT_EQ(mu_sum, n == 1 ? 1 : 0);
        ASSERT_EQ(mobius_invert([](std::int64_t d) { return log_vector(d); }, n), mangoldt(n)) << n;
    }
}

TEST(Lcm, Examples) {
    EXPECT_EQ(lcm_upto(1), 1);
    EXPECT_EQ(lcm_upto(10), 2520);
    EXPECT_EQ(lcm_upto(20), mpz_class("232792560"));
    EXPECT_EQ(lcm_upto(2000), lcm_upto_iterated(2000));
    EXPECT_THROW(lcm_upto(0), std::domain_error);
    EXPECT_THROW(lcm_upto(100001), std::domain_error);
}

TEST(ChebyshevPsi, Examples) {
    EXPECT_TRUE(chebyshev_psi(1).is_zero());
    EXPECT_EQ(chebyshev_psi(10), LogVector::from_pairs({{2, 3}, {3, 2}, {5, 1}, {7, 1}}));
    EXPECT_EQ(*chebyshev_psi(10).exp_integer(), 2520);
    EXPECT_EQ(chebyshev_psi(4), LogVector::from_pairs({{2, 2}, {3, 1}}));
}

TEST(ChebyshevPsi, MatchesLcmExponentsUpTo1000) {
    LogVector running;
    for (std::int64_t n = 1; n <= 1000; ++n) {
        running += mangoldt(n);
        ASSERT_EQ(running, exponent_vector(lcm_upto(n), n)) << n;
    }
    EXPECT_EQ(running, chebyshev_psi(1000));
}

TEST(ExponentVector, RejectsLargeFactor) {
    EXPECT_THROW(exponent_vector(mpz_class(2 * 101), 100), std::domain_error);
    EXPECT_THROW(exponent_vector(mpz_class(0), 100), std::domain_error);
}

TEST(ArithmeticFunctionTable, MatchesPointwise) {
    const ArithmeticFunctionTable table(3000);
    EXPECT_EQ(table.phi(1), 1);
    EXPECT_EQ(table.mu(1), 1);
    EXPECT_TRUE(table.mangoldt(1).is_zero());
    for (std::int64_t n = 1; n <= 3000; ++n) {
        ASSERT_EQ(table.phi(n), phi(n)) << n;
        ASSERT_EQ(table.mu(n), mobius(n)) << n;
        ASSERT_EQ(table.mangoldt(n), mangoldt(n)) << n;
    }
    EXPECT_THROW(table.phi(3001), std::out_of_range);
    EXPECT_THROW(ArithmeticFunctionTable(0), std::domain_error);
}

TEST(ArithmeticFunctionTable, TotientDivisorSum) {
    const ArithmeticFunctionTable table(20000);
    std::vector<std::int64_t> sums(20001, 0);
    for (std::int64_t d = 1; d <= 20000; ++d)
        for (std::int64_t m = d; m <= 20000; m += d) sums[static_cast<std::size_t>(m)] += table.phi(d);
    for (std::int64_t n = 1; n <= 20000; ++n) ASSERT_EQ(sums[static_cast<std::size_t>(n)], n);
}

} // namespace
} // namespace gammaprod
