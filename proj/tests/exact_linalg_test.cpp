#include "minperm/exact_linalg.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace minperm {
namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t order)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

TEST(Factorial, SmallValues)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(1), 1);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(factorial(20), BigInt(oracle::product_factorial(20)));
}

TEST(Factorial, TableMatchesRecurrenceUpTo60)
{
    FactorialTable fact;
    for (unsigned n = 1; n <= 60; ++n) {
        EXPECT_EQ(fact(n), n * fact(n - 1));
        EXPECT_EQ(fact(n), factorial(n));
    }
    // 60! = 8.32e81, well beyond 64 bits.
    EXPECT_EQ(factorial(60).str().size(), 82u);
    EXPECT_EQ(fact.cached(), 61u);
}

TEST(Factorial, ReciprocalOfNegativeIsZero)
{
    FactorialTable fact;
    EXPECT_EQ(fact.reciprocal(-1), 0);
    EXPECT_EQ(fact.reciprocal(0), 1);
    EXPECT_EQ(fact.reciprocal(4), Rational(1, 24));
}

TEST(Rational, StaysReduced)
{
    Rational q = Rational(6) / Rational(-8);
    EXPECT_EQ(boost::multiprecision::numerator(q), -3);
    EXPECT_EQ(boost::multiprecision::denominator(q), 4);
    Rational z = Rational(1, 3) - Rational(2, 6);
    EXPECT_EQ(boost::multiprecision::numerator(z), 0);
    EXPECT_EQ(boost::multiprecision::denominator(z), 1);
}

TEST(DetExact, Identity)
{
    EXPECT_EQ(det_exact(ExactMatrix::identity(3)), 1);
    EXPECT_EQ(det_exact(ExactMatrix::identity(7)), 1);
}

TEST(DetExact, TwoByTwoFromShape42)
{
    ExactMatrix m{{Rational(1, 24), Rational(1, 120)}, {1, Rational(1, 2)}};
    EXPECT_EQ(det_exact(m), Rational(1, 80));
    EXPECT_EQ(det_exact(m), oracle::laplace_det(m));
}

TEST(DetExact, EqualRowsGiveZero)
{
    std::mt19937 rng(7);
    for (std::size_t order = 2; order <= 6; ++order) {
        auto m = random_matrix(rng, order);
        for (std::size_t j = 0; j < order; ++j)
            m.at(order - 1, j) = m.at(0, j);
        EXPECT_EQ(det_exact(m), 0) << m;
    }
}

TEST(DetExact, NeedsRowSwap)
{
    ExactMatrix m{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    EXPECT_EQ(det_exact(m), 1);
    ExactMatrix p{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(det_exact(p), -1);
}

TEST(DetExact, MatchesLaplaceExpansion)
{
    std::mt19937 rng(12345);
    for (int t = 0; t < 60; ++t) {
        auto m = random_matrix(rng, 1 + t % 6);
        EXPECT_EQ(det_exact(m), oracle::laplace_det(m)) << m;
    }
}

TEST(DetExact, TransposeInvariant)
{
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        auto m = random_matrix(rng, 1 + t % 7);
        EXPECT_EQ(det_exact(m), det_exact(m.transposed())) << m;
    }
}

TEST(DetExact, UpperTriangularIsDiagonalProduct)
{
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 1 + t % 8);
        Rational diag = 1;
        for (std::size_t i = 0; i < m.order(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                m.at(i, j) = 0;
            diag *= m.at(i, i);
        }
        EXPECT_EQ(det_exact(m), diag);
    }
}

TEST(DetExact, RowScalingIsExact)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 1 + t % 6);
        Rational const c(num(rng), den(rng));
        auto scaled = m;
        for (std::size_t j = 0; j < m.order(); ++j)
            scaled.at(0, j) *= c;
        EXPECT_EQ(det_exact(scaled), c * det_exact(m));
    }
}

TEST(ExactMatrix, RejectsBadShapes)
{
    EXPECT_THROW(ExactMatrix(0), std::invalid_argument);
    EXPECT_THROW((ExactMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(ToInteger, RejectsFractions)
{
    EXPECT_EQ(to_integer(Rational(10, 5)), 2);
    EXPECT_THROW(to_integer(Rational(1, 2)), std::logic_error);
}

} // namespace
} // namespace minperm
