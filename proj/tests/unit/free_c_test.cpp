#include <gtest/gtest.h>

#include <random>

#include "brace/error.hpp"
#include "brace/free_c.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace brace;

namespace {

FreeCElement c(std::int64_t i) { return FreeCElement::basis(i); }

FreeCElement random_element(std::mt19937_64& rng, int support, int coeff)
{
    std::uniform_int_distribution<int> idx(-support, support), val(-coeff, coeff), len(0, 5);
    FreeCElement x;
    for (int t = len(rng); t > 0; --t)
        x += Int(val(rng)) * c(idx(rng));
    return x;
}

} // namespace

TEST(FreeC, CanonicalForm)
{
    EXPECT_TRUE((c(3) - c(3)).is_zero());
    EXPECT_EQ((c(1) + c(1)).coeffs().size(), 1U);
    EXPECT_EQ((Int(2) * c(1)).coeff(1), 2);
    EXPECT_EQ(FreeCElement({{0, 1}, {5, 0}}), c(0));
    EXPECT_EQ((c(0) - Int(2) * c(1)).to_string(), "c_0 - 2c_1");
    EXPECT_EQ(FreeCElement().to_string(), "0");
}

TEST(FreeC, Weight)
{
    EXPECT_EQ(weight(FreeCElement()), 0);
    EXPECT_EQ(weight(c(0)), 1);
    EXPECT_EQ(weight(Int(2) * c(3) - c(-1)), 1);
}

TEST(FreeC, Lambda)
{
    const auto y = Int(3) * c(2) - c(-4);
    EXPECT_EQ(lambda_c(c(1) - c(7), y), y);
    EXPECT_EQ(lambda_c(c(0), c(0)), c(1));
    EXPECT_EQ(lambda_c(-c(2), c(0) + c(5)), c(-1) + c(4));
}

TEST(FreeC, Mul)
{
    const auto y = c(4) - c(9);
    EXPECT_EQ(mul_c(FreeCElement(), y), y);
    EXPECT_EQ(mul_c(c(0), c(0)), c(0) + c(1));
    FreeCElement power = c(0), expected = c(0);
    for (int n = 2; n <= 12; ++n) {
        power = mul_c(power, c(0));
        expected += c(n - 1);
        EXPECT_EQ(power, expected);
        EXPECT_EQ(power_c(c(0), n), expected);
    }
}

TEST(FreeC, Star)
{
    EXPECT_EQ(star_c(c(0), c(0)), c(1) - c(0));
    EXPECT_TRUE(star_c(c(2) - c(3), c(6)).is_zero());
    EXPECT_EQ(star_c(Int(2) * c(0), c(3)), c(5) - c(3));
}

TEST(FreeC, Inverse)
{
    EXPECT_TRUE(inv_c(FreeCElement()).is_zero());
    EXPECT_EQ(inv_c(c(0)), -c(-1));
    EXPECT_EQ(inv_c(c(0) + c(1)), -c(-2) - c(-1));
    EXPECT_TRUE(mul_c(c(0), -c(-1)).is_zero());
    // The unshifted-sign variant does not invert.
    EXPECT_FALSE(mul_c(c(0), -c(1)).is_zero());
}

TEST(FreeC, SSequence)
{
    EXPECT_EQ(s_sequence(1), c(0));
    EXPECT_EQ(s_sequence(2), c(1) - c(0));
    EXPECT_EQ(s_sequence(4), -c(0) + Int(3) * c(1) - Int(3) * c(2) + c(3));
    EXPECT_THROW(s_sequence(0), Error);
    EXPECT_THROW(s_closed_form(-1), Error);
    for (int j = 1; j <= 40; ++j) {
        const auto s = s_sequence(j);
        EXPECT_FALSE(s.is_zero());
        EXPECT_EQ(s, s_closed_form(j));
        for (int k = 0; k < j; ++k)
            EXPECT_EQ(s.coeff(j - k - 1), sign_power(k) * oracle::binom(j - 1, k));
    }
}

TEST(FreeC, DecompositionInD)
{
    EXPECT_TRUE(is_in_D(FreeCElement()));
    EXPECT_TRUE(express_in_star_generators(FreeCElement()).empty());
    const auto d = express_in_star_generators(c(1) - c(0));
    ASSERT_EQ(d.size(), 1U);
    EXPECT_EQ(d[0], (std::pair<Int, Int>{1, 1}));
    EXPECT_FALSE(is_in_D(c(0)));
    try {
        express_in_star_generators(c(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(FreeC, RandomProperties)
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 2000; ++iter) {
        const auto x = random_element(rng, 10, 10);
        const auto y = random_element(rng, 10, 10);
        const auto z = random_element(rng, 10, 10);
        EXPECT_EQ(weight(x + y), weight(x) + weight(y));
        EXPECT_EQ(weight(mul_c(x, y)), weight(x) + weight(y));
        EXPECT_EQ(weight(lambda_c(y, x)), weight(x));
        EXPECT_EQ(lambda_c(lambda_c(y, x), z), lambda_c(x, z));
        EXPECT_EQ(mul_c(mul_c(x, y), z), mul_c(x, mul_c(y, z)));
        EXPECT_EQ(mul_c(x, y + z) + x, mul_c(x, y) + mul_c(x, z));
        EXPECT_TRUE(mul_c(x, inv_c(x)).is_zero());
        EXPECT_TRUE(mul_c(inv_c(x), x).is_zero());
        const auto s = star_c(x, y);
        EXPECT_EQ(weight(s), 0);
        EXPECT_TRUE(star_c(s, z).is_zero());
        EXPECT_EQ(from_star_generators(express_in_star_generators(s)), s);
        // Each term i of the decomposition stands for c_0^i * c_0 = c_i - c_0.
        FreeCElement rebuilt;
        for (const auto& [i, coeff] : express_in_star_generators(s))
            rebuilt += coeff * star_c(power_c(c(0), i), c(0));
        EXPECT_EQ(rebuilt, s);
    }
}

TEST(FreeC, PowerIsBinomialSumOfStarPowers)
{
    std::vector<FreeCElement> a{c(0)};
    for (int k = 1; k < 30; ++k)
        a.push_back(star_c(c(0), a.back()));
    for (int n = 1; n <= 30; ++n) {
        FreeCElement sum;
        for (int k = 1; k <= n; ++k)
            sum += oracle::binom(n, k) * a[k - 1];
        EXPECT_EQ(power_c(c(0), n), sum) << n;
    }
}

TEST(FreeC, NegativePowers)
{
    for (int n = -6; n <= 6; ++n) {
        const auto x = c(2) - Int(3) * c(-1);
        EXPECT_TRUE(mul_c(power_c(x, n), power_c(x, -n)).is_zero());
    }
}
