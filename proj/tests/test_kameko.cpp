#include "hitproblem/kameko.hpp"
#include "hitproblem/quotient.hpp"

#include <gtest/gtest.h>

using namespace hitproblem;

TEST(Kameko, DownAndUp)
{
    EXPECT_EQ(kameko_down(Monomial{3, 1, 5}), (Monomial{1, 0, 2}));
    EXPECT_FALSE(kameko_down(Monomial{3, 2, 5}).has_value());
    EXPECT_EQ(kameko_up(Monomial{1, 0, 2}), (Monomial{3, 1, 5}));
    EXPECT_THROW(kameko_up(Monomial{40000}), CapacityError);
    auto f = Polynomial(3, {Monomial{3, 1, 5}, Monomial{3, 2, 4}});
    EXPECT_EQ(kameko_down(f), Polynomial(Monomial{1, 0, 2}));
}

TEST(Kameko, RoundTrip)
{
    for (int k = 1; k <= 4; ++k)
        for (unsigned n = 0; n <= 10; ++n)
            for (const auto& y : enumerate_monomials(k, n))
                EXPECT_EQ(kameko_down(kameko_up(y)), y);
}

TEST(Kameko, IsomorphismWhenCriterionHolds)
{
    BasisCache cache;
    int qualifying = 0;
    for (int k = 1; k <= 4; ++k)
        for (unsigned m = 0; m <= 12; ++m) {
            auto r = kameko_iso_check(k, m, &cache);
            EXPECT_EQ(r.source_degree, 2 * m + static_cast<unsigned>(k));
            if (!r.criterion_met) {
                EXPECT_FALSE(r.isomorphism);
                continue;
            }
            ++qualifying;
            EXPECT_TRUE(r.isomorphism) << k << " " << m;
            EXPECT_EQ(r.source_dim, r.target_dim);
            EXPECT_TRUE(r.representative_independent);
        }
    EXPECT_GT(qualifying, 5);
}

TEST(Kameko, NonQualifyingCaseIsSurjectiveOnly)
{
    // mu(7) = 1 < 3: the map is onto but not injective.
    auto r = kameko_iso_check(3, 2);
    EXPECT_FALSE(r.criterion_met);
    EXPECT_FALSE(r.isomorphism);
    EXPECT_EQ(r.induced_rank, r.target_dim);
    EXPECT_GT(r.source_dim, r.target_dim);
}

TEST(Reduction, DegreeTwelve)
{
    auto c = reduce_degree(5, 12);
    EXPECT_FALSE(c.wood);
    ASSERT_EQ(c.steps.size(), 3u);
    EXPECT_EQ(c.steps[0].d, 2u);
    EXPECT_EQ(c.steps[0].s, 4u);
    EXPECT_EQ(c.steps[0].m, 0u);
    EXPECT_EQ(c.steps[1].s, 2u);
    EXPECT_EQ(c.steps[1].m, 5u);
    EXPECT_EQ(c.steps[2].s, 4u);
    EXPECT_EQ(c.steps[2].m, 4u);
}

TEST(Reduction, Decompositions)
{
    for (unsigned n = 1; n <= 200; ++n) {
        auto c = reduce_degree(5, n);
        EXPECT_EQ(c.wood, mu(n) > 5);
        for (const auto& s : c.steps)
            EXPECT_EQ(s.s * ((1ull << s.d) - 1) + (s.m << s.d), n);
    }
    EXPECT_TRUE(reduce_degree(2, 12).wood);
    EXPECT_TRUE(reduce_degree(2, 12).steps.empty());
    EXPECT_THROW(reduce_degree(5, 0), OutOfRange);
}
