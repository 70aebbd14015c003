#include "hitproblem/polynomial.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hitproblem;

TEST(Polynomial, TermsCancelInPairs)
{
    Polynomial f(2, {Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 0}});
    EXPECT_EQ(f, Polynomial(Monomial{0, 1}));
    EXPECT_TRUE((f + f).is_zero());
    EXPECT_EQ(Polynomial(2, {Monomial{2, 0}, Monomial{2, 0}}), Polynomial::zero(2));
}

TEST(Polynomial, TermsSortedDescending)
{
    Polynomial f(2, {Monomial{1, 3}, Monomial{3, 1}, Monomial{2, 2}});
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f.leading(), (Monomial{3, 1}));
    for (std::size_t i = 1; i < f.size(); ++i)
        EXPECT_GT(oracle::compare(f.terms()[i - 1], f.terms()[i]), 0);
    EXPECT_TRUE(f.contains(Monomial{2, 2}));
    EXPECT_FALSE(f.contains(Monomial{0, 4}));
    EXPECT_THROW(Polynomial::zero(2).leading(), OutOfRange);
}

TEST(Polynomial, Multiply)
{
    auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    // (x + y)^2 = x^2 + y^2 in characteristic two.
    EXPECT_EQ((x + y) * (x + y), Polynomial(2, {Monomial{2, 0}, Monomial{0, 2}}));
    EXPECT_EQ((x + y) * (x + y), (x + y).frobenius(1));
    EXPECT_EQ(x * Polynomial::one(2), x);
    EXPECT_TRUE((x * Polynomial::zero(2)).is_zero());
}

TEST(Polynomial, RingAxiomsOnRandomInputs)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int k = 1 + static_cast<int>(rng() % 4);
        auto f = oracle::random_polynomial(rng, k, 5, 4);
        auto g = oracle::random_polynomial(rng, k, 3, 3);
        auto h = oracle::random_polynomial(rng, k, 3, 3);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f * g).frobenius(2), f.frobenius(2) * g.frobenius(2));
        EXPECT_TRUE((f * g).is_homogeneous());
        if (!(f * g).is_zero()) {
            EXPECT_EQ((f * g).degree(), 8u);
        }
    }
}

TEST(Polynomial, ArityChecks)
{
    EXPECT_THROW(Polynomial(2, {Monomial{1, 0, 0}}), ArityMismatch);
    EXPECT_THROW(Polynomial::one(2) + Polynomial::one(3), ArityMismatch);
    EXPECT_THROW(Polynomial::one(2) * Polynomial::one(3), ArityMismatch);
    EXPECT_THROW(Polynomial(0), CapacityError);
    EXPECT_THROW(Polynomial(7), CapacityError);
}

TEST(Substitute, LinearMap)
{
    // x1 -> x1 + x2, x2 -> x2 sends x1^3 x2 to (x1 + x2)^3 x2.
    auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial f(Monomial{3, 1});
    auto g = substitute(f, {x + y, y}, 2);
    EXPECT_EQ(g, (x + y) * (x + y) * (x + y) * y);
    EXPECT_EQ(g.size(), 4u);
}

TEST(Substitute, IntoMoreVariables)
{
    auto x1 = Polynomial::variable(3, 0), x2 = Polynomial::variable(3, 1), x3 = Polynomial::variable(3, 2);
    Polynomial f(Monomial{1, 2});
    EXPECT_EQ(substitute(f, {x1 * x2, x3}, 3), x1 * x2 * x3 * x3);
    EXPECT_TRUE(substitute(f, {x1, Polynomial::zero(3)}, 3).is_zero());
    EXPECT_THROW(substitute(f, {x1}, 3), ArityMismatch);
    EXPECT_THROW(substitute(f, {x1, Polynomial::one(2)}, 3), ArityMismatch);
}

TEST(Substitute, IsAHomomorphism)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto f = oracle::random_polynomial(rng, 3, 4, 3);
        auto g = oracle::random_polynomial(rng, 3, 2, 3);
        std::vector<Polynomial> images;
        for (int j = 0; j < 3; ++j)
            images.push_back(oracle::random_polynomial(rng, 4, 1, 2));
        EXPECT_EQ(substitute(f * g, images, 4), substitute(f, images, 4) * substitute(g, images, 4));
        EXPECT_EQ(substitute(f + g, images, 4), substitute(f, images, 4) + substitute(g, images, 4));
    }
}
