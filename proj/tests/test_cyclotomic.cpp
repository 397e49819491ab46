#include "gammaprod/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <map>

namespace gammaprod {
namespace {

// Reference route without the sparse grouping: x^n - 1 divided by every
// lower Phi_d, each computed the same way.
const IntPolynomial& cyclotomic_by_plain_division(std::int64_t n) {
    static std::map<std::int64_t, IntPolynomial> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPolynomial q = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n));
    for (std::int64_t d : divisors(n))
        if (d < n) q = poly_divexact(q, cyclotomic_by_plain_division(d));
    return memo.emplace(n, std::move(q)).first->second;
}

TEST(PolyMul, Examples) {
    EXPECT_EQ(poly_mul(IntPolynomial{-1, 1}, IntPolynomial{1, 1}), (IntPolynomial{-1, 0, 1}));
    EXPECT_TRUE(poly_mul(IntPolynomial{}, IntPolynomial{3, 4, 5}).is_zero());
    EXPECT_EQ(poly_mul(IntPolynomial{1, 1, 1}, IntPolynomial{-1, 1}), IntPolynomial::x_pow_minus_one(3));
}

TEST(PolyDivexact, Examples) {
    EXPECT_EQ(poly_divexact(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}), (IntPolynomial{1, 1}));
    const IntPolynomial denom = poly_mul(poly_mul(IntPolynomial{-1, 1}, IntPolynomial{1, 1}), IntPolynomial{1, 1, 1});
    EXPECT_EQ(poly_divexact(IntPolynomial::x_pow_minus_one(6), denom), (IntPolynomial{1, -1, 1}));
}

TEST(PolyDivexact, Errors) {
    EXPECT_THROW(poly_divexact(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 1}), InexactDivision);
    EXPECT_THROW(poly_divexact(IntPolynomial{1, 1}, IntPolynomial{1, 1, 1}), InexactDivision);
    EXPECT_THROW(poly_divexact(IntPolynomial{2, 4}, IntPolynomial{1, 2}), std::invalid_argument);
}

TEST(Cyclotomic, Examples) {
    EXPECT_EQ(cyclotomic_poly(1), (IntPolynomial{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(6), (IntPolynomial{1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), (IntPolynomial{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(6).to_string(), "x^2 - x + 1");
    EXPECT_EQ(cyclotomic_poly(1).to_string(), "x - 1");
    EXPECT_EQ(cyclotomic_poly(12).to_string(), "x^4 - x^2 + 1");
    EXPECT_THROW(cyclotomic_poly(0), std::domain_error);
    EXPECT_THROW(cyclotomic_poly(10001), std::domain_error);
}

TEST(Cyclotomic, AtOne) {
    EXPECT_EQ(cyclotomic_at_one(2), 2);
    EXPECT_EQ(cyclotomic_at_one(6), 1);
    EXPECT_EQ(cyclotomic_at_one(9), 3);
    EXPECT_THROW(cyclotomic_at_one(1), std::domain_error);
}

TEST(Cyclotomic, MatchesPlainDivisionRoute) {
    for (std::int64_t n = 1; n <= 300; ++n) ASSERT_EQ(cyclotomic_poly(n), cyclotomic_by_plain_division(n)) << n;
}

// First Phi_n with a coefficient other than 0, +-1 is n = 105 (coefficient -2 at x^7).
TEST(Cyclotomic, Phi105) {
    const auto& p = cyclotomic_poly(105);
    EXPECT_EQ(p[7], -2);
    EXPECT_EQ(p.degree(), 48);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        IntPolynomial prod{1};
        for (std::int64_t d : divisors(n)) prod = poly_mul(prod, cyclotomic_poly(d));
        ASSERT_EQ(prod, IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n))) << n;
    }
}

TEST(Cyclotomic, DegreePalindromeAndValueAtOne) {
    for (std::int64_t n = 2; n <= 2000; ++n) {
        const auto& p = cyclotomic_poly(n);
        ASSERT_TRUE(p.is_monic());
        ASSERT_EQ(p.degree(), phi(n)) << n;
        const auto& c = p.coeffs();
        ASSERT_TRUE(std::equal(c.begin(), c.end(), c.rbegin())) << n;
        ASSERT_EQ(cyclotomic_at_one(n), *mangoldt(n).exp_integer()) << n;
        ASSERT_EQ(p.evaluate(1), cyclotomic_at_one(n));
    }
}

} // namespace
} // namespace gammaprod
