#include "hitproblem/monomial.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hitproblem;

TEST(WeightVector, Examples)
{
    EXPECT_EQ(WeightVector::of(Monomial{1, 2, 3, 3, 3}), (WeightVector{4, 4}));
    EXPECT_EQ(WeightVector::of(Monomial{7, 3, 1, 1, 0}), (WeightVector{4, 2, 1}));
    EXPECT_TRUE(WeightVector::of(Monomial(5)).empty());
}

TEST(WeightVector, MatchesOracleAndDegree)
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        Monomial m(1 + static_cast<int>(rng() % 6));
        for (int j = 0; j < m.vars(); ++j)
            m.set(j, static_cast<unsigned>(rng() % 3000));
        auto w = WeightVector::of(m);
        EXPECT_EQ(w.entries(), oracle::weight(m));
        EXPECT_EQ(w.degree(), m.degree());
    }
}

TEST(WeightVector, PaddedComparison)
{
    EXPECT_LT((WeightVector{4}), (WeightVector{4, 1}));
    EXPECT_EQ((WeightVector{4, 0, 0}), (WeightVector{4}));
    EXPECT_GT((WeightVector{4, 2, 1}), (WeightVector{2, 3, 1}));
}

TEST(WeightVector, TextForms)
{
    auto w = WeightVector{4, 4, 4, 2, 1};
    EXPECT_EQ(w.to_string(), "4,4,4,2,1");
    EXPECT_EQ(w.to_run_length(), "4^(3),2,1");
    EXPECT_EQ(WeightVector::parse(w.to_run_length()), w);
    EXPECT_EQ(WeightVector::parse("4,4,4,2,1"), w);
    EXPECT_THROW(WeightVector::parse("4,x"), ParseError);
}

TEST(WeightVector, TopAndBar)
{
    EXPECT_EQ(WeightVector::top(5, 3), (WeightVector{4, 4, 4}));
    EXPECT_EQ(WeightVector::bar(5, 2), (WeightVector{4, 2, 1}));
    EXPECT_EQ(WeightVector::bar(5, 1), (WeightVector{2, 1}));
    EXPECT_EQ(WeightVector::bar(5, 4).degree(), 60u);
}

TEST(Order, Examples)
{
    EXPECT_TRUE(compare_monomials(Monomial{2, 2}, Monomial{3, 1}) < 0);
    EXPECT_TRUE(compare_monomials(Monomial{1, 3}, Monomial{3, 1}) < 0);
    EXPECT_TRUE(compare_monomials(Monomial{3, 1}, Monomial{3, 1}) == 0);
}

TEST(Order, RejectsMismatchedOperands)
{
    EXPECT_THROW(compare_monomials(Monomial{1, 2}, Monomial{1, 1}), InvalidComparison);
    EXPECT_THROW(compare_monomials(Monomial{1, 2}, Monomial{1, 2, 0}), InvalidComparison);
}

TEST(Order, ExhaustiveTotalOrderAgainstOracle)
{
    for (int k = 1; k <= 4; ++k)
        for (unsigned n = 0; n <= 10; ++n) {
            auto ms = oracle::monomials(k, n);
            for (const auto& x : ms)
                for (const auto& y : ms) {
                    int expect = oracle::compare(x, y);
                    auto got = compare_monomials(x, y);
                    ASSERT_EQ(got < 0, expect < 0) << x.to_string() << " " << y.to_string();
                    ASSERT_EQ(got == 0, expect == 0);
                    ASSERT_EQ(got == 0, x == y);
                }
        }
}

TEST(Mu, Examples)
{
    EXPECT_EQ(mu(7), 1u);
    EXPECT_EQ(mu(12), 4u);
    EXPECT_EQ(mu(4), 2u);
    EXPECT_EQ(mu(0), 0u);
}

TEST(Mu, AgreesWithSearchUpTo200)
{
    for (unsigned n = 0; n <= 200; ++n)
        ASSERT_EQ(mu(n), oracle::mu(n)) << n;
}

TEST(Spike, Predicate)
{
    EXPECT_TRUE(is_spike(Monomial{7, 3, 1, 1, 0}));
    EXPECT_FALSE(is_spike(Monomial{4, 3}));
    EXPECT_TRUE(is_spike(Monomial(3)));
}

TEST(Spike, MinimalSpike)
{
    EXPECT_EQ(minimal_spike(5, 12), (Monomial{7, 3, 1, 1, 0}));
    EXPECT_EQ(minimal_spike(5, 7), (Monomial{7, 0, 0, 0, 0}));
    EXPECT_FALSE(minimal_spike(2, 12).has_value());
}

// The minimal spike is the smallest spike of its degree.
TEST(Spike, MinimalAmongAllSpikes)
{
    for (int k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 40; ++n) {
            std::optional<Monomial> best;
            for (const auto& y : oracle::monomials(k, n))
                if (is_spike(y) && (!best || oracle::compare(y, *best) < 0))
                    best = y;
            auto z = minimal_spike(k, n);
            ASSERT_EQ(z.has_value(), mu(n) <= static_cast<unsigned>(k)) << k << " " << n;
            if (!z)
                continue;
            // The returned representative has decreasing exponents; the
            // order-minimal spike is a permutation of it.
            ASSERT_TRUE(best.has_value());
            EXPECT_EQ(WeightVector::of(*z), WeightVector::of(*best)) << k << " " << n;
        }
}

TEST(Enumeration, SmallStream)
{
    auto ms = enumerate_monomials(2, 2);
    ASSERT_EQ(ms.size(), 3u);
    EXPECT_EQ(ms[0], (Monomial{1, 1}));
    EXPECT_EQ(ms[1], (Monomial{2, 0}));
    EXPECT_EQ(ms[2], (Monomial{0, 2}));
}

TEST(Enumeration, Counts)
{
    EXPECT_EQ(enumerate_monomials(5, 4).size(), 70u);
    EXPECT_EQ(monomial_count(5, 28), 35960u);
    EXPECT_EQ(enumerate_monomials(5, 28).size(), 35960u);
    EXPECT_EQ(monomial_count(5, 60), 635376u);
}

TEST(Enumeration, DescendingRankUnrank)
{
    for (int k = 1; k <= 5; ++k)
        for (unsigned n = 0; n <= 12; ++n) {
            DegreeContext ctx(k, n);
            ASSERT_EQ(ctx.size(), oracle::monomials(k, n).size());
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                ASSERT_EQ(ctx.rank(ctx.unrank(i)), i);
                if (i > 0) {
                    ASSERT_GT(oracle::compare(ctx.unrank(i - 1), ctx.unrank(i)), 0);
                }
            }
        }
}

TEST(Enumeration, CapacityGuard)
{
    EXPECT_THROW(DegreeContext(5, 60, 1000), CapacityError);
}

TEST(Enumeration, MonomialsOfWeightPartitionTheSlice)
{
    for (int k = 1; k <= 5; ++k)
        for (unsigned n : {0u, 5u, 12u, 17u}) {
            const std::size_t total = enumerate_monomials(k, n).size();
            std::size_t by_weight = 0;
            std::map<std::vector<unsigned>, std::size_t> counts;
            for (const auto& m : oracle::monomials(k, n))
                ++counts[oracle::weight(m)];
            for (const auto& [w, c] : counts) {
                auto block = monomials_of_weight(k, WeightVector(w));
                EXPECT_EQ(block.size(), c);
                for (const auto& m : block)
                    EXPECT_EQ(oracle::weight(m), w);
                by_weight += block.size();
            }
            EXPECT_EQ(by_weight, total);
        }
}

TEST(Monomial, Bounds)
{
    Monomial m(3);
    EXPECT_THROW(m.set(3, 1), OutOfRange);
    EXPECT_THROW(m.set(0, 70000), CapacityError);
    EXPECT_THROW(Monomial(7), CapacityError);
}

TEST(Monomial, Parse)
{
    EXPECT_EQ(parse_monomial("7 3 1 1 0"), (Monomial{7, 3, 1, 1, 0}));
    EXPECT_THROW(parse_monomial(""), ParseError);
    EXPECT_THROW(parse_monomial("1 -2"), ParseError);
    EXPECT_THROW(parse_monomial("1 70000"), CapacityError);
}
