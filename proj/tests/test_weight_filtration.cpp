#include "hitproblem/quotient.hpp"
#include "hitproblem/weight_filtration.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <mutex>
#include <set>

using namespace hitproblem;

namespace {

BlockOptions exact()
{
    BlockOptions o;
    o.singer = SingerPolicy::never;
    return o;
}

}  // namespace

TEST(Weights, Examples)
{
    auto ws = enumerate_weights(5, 4);
    std::set<WeightVector> got(ws.begin(), ws.end());
    EXPECT_EQ(got, (std::set<WeightVector>{{4}, {2, 1}, {0, 2}, {0, 0, 1}}));
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end(), std::greater<>{}));
    EXPECT_TRUE(enumerate_weights(1, 2).size() == 1);
}

TEST(Weights, MatchOccurringWeights)
{
    for (int k = 1; k <= 4; ++k)
        for (unsigned n = 0; n <= 16; ++n) {
            std::set<std::vector<unsigned>> seen;
            for (const auto& m : oracle::monomials(k, n))
                seen.insert(oracle::weight(m));
            std::set<std::vector<unsigned>> listed;
            for (const auto& w : enumerate_weights(k, n))
                listed.insert(w.entries());
            EXPECT_EQ(listed, seen) << k << " " << n;
        }
}

TEST(Weights, BlockSizes)
{
    for (int k = 1; k <= 5; ++k)
        for (unsigned n : {5u, 12u, 20u}) {
            std::map<std::vector<unsigned>, std::uint64_t> counts;
            for (const auto& m : oracle::monomials(k, n))
                ++counts[oracle::weight(m)];
            for (const auto& [w, c] : counts)
                EXPECT_EQ(weight_block_size(k, WeightVector(w)), c);
        }
    EXPECT_EQ(upset_size(5, WeightVector{4}), 5u);
}

TEST(Blocks, DegreeTwelve)
{
    EXPECT_EQ(compute_block(5, WeightVector{4, 4}).dimension(), 15u);
    EXPECT_EQ(compute_block(5, WeightVector{4, 2, 1}).dimension(), 175u);
    EXPECT_EQ(compute_block(5, WeightVector{2, 3, 1}, exact()).dimension(), 0u);
}

TEST(Blocks, ProjectionIsOnlyAnUpperBound)
{
    BlockOptions proj = exact();
    proj.method = BlockMethod::projection;
    EXPECT_EQ(compute_block(5, WeightVector{2, 3, 1}, proj).dimension(), 70u);
    for (const auto& w : enumerate_weights(4, 14))
        EXPECT_GE(compute_block(4, w, proj).dimension(), compute_block(4, w, exact()).dimension()) << w.to_string();
}

TEST(Blocks, SingerShortcutAgreesWithElimination)
{
    BlockOptions always;
    always.singer = SingerPolicy::always;
    for (const auto& w : enumerate_weights(5, 12)) {
        auto a = compute_block(5, w, always), b = compute_block(5, w, exact());
        EXPECT_EQ(a.dimension(), b.dimension()) << w.to_string();
        if (a.method == BlockMethod::singer) {
            EXPECT_EQ(a.dimension(), 0u);
        }
    }
}

TEST(Blocks, NormalForm)
{
    auto b = compute_block(4, WeightVector{2, 1}, exact());
    auto adm = b.admissibles();
    ASSERT_EQ(adm.size(), b.dimension());
    for (const auto& m : adm)
        EXPECT_EQ(b.normal_form(Polynomial(m)), Polynomial(m));
    // lighter terms vanish, heavier ones are rejected
    EXPECT_TRUE(b.normal_form(Polynomial(Monomial{0, 0, 0, 4})).is_zero());
    EXPECT_THROW(b.normal_form(Polynomial(Monomial{1, 1, 1, 1})), DegreeMismatch);
}

TEST(Filtration, MainDegrees)
{
    EXPECT_EQ(dim_by_filtration(5, 4), 45u);
    EXPECT_EQ(dim_by_filtration(5, 12), 190u);
    EXPECT_EQ(dim_by_filtration(5, 28), 480u);
}

TEST(Filtration, AgreesWithMonolithic)
{
    for (int k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 40; ++n)
            EXPECT_EQ(dim_by_filtration(k, n), compute_basis(k, n).dimension()) << k << " " << n;
    for (unsigned n = 0; n <= 20; ++n)
        EXPECT_EQ(dim_by_filtration(4, n), compute_basis(4, n).dimension()) << n;
}

TEST(Filtration, BlockBasesPartitionTheAdmissibles)
{
    // With exact blocks, the admissible monomials of each weight are exactly
    // the block's admissibles.
    auto whole = compute_basis(4, 13);
    std::set<Monomial, DescendingOrder> from_blocks;
    for (const auto& w : enumerate_weights(4, 13))
        for (const auto& m : compute_block(4, w, exact()).admissibles())
            from_blocks.insert(m);
    std::set<Monomial, DescendingOrder> direct(whole.admissibles().begin(), whole.admissibles().end());
    EXPECT_EQ(from_blocks, direct);
}

TEST(Filtration, ParallelRunIsDeterministic)
{
    FiltrationOptions one, three;
    three.jobs = 3;
    std::mutex mu;
    std::size_t calls = 0;
    three.on_block = [&](const BlockSummary&) {
        std::lock_guard lock(mu);
        ++calls;
    };
    auto a = filtration(5, 20, one), b = filtration(5, 20, three);
    ASSERT_EQ(a.blocks.size(), b.blocks.size());
    EXPECT_EQ(calls, b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        EXPECT_EQ(a.blocks[i].omega, b.blocks[i].omega);
        EXPECT_EQ(a.blocks[i].dim, b.blocks[i].dim);
    }
    EXPECT_EQ(a.total(), b.total());
}

TEST(Filtration, TopWeightClosedForm)
{
    for (int k = 2; k <= 5; ++k)
        for (int d = 1; d <= 3; ++d)
            EXPECT_EQ(compute_block(k, WeightVector::top(k, d)).dimension(), top_weight_dimension(k, d))
                << k << " " << d;
    EXPECT_EQ(top_weight_dimension(5, 4), 30u);
    EXPECT_EQ(top_weight_dimension(5, 9), 31u);
}

TEST(Filtration, Dichotomy)
{
    for (int d = 1; d <= 3; ++d)
        EXPECT_TRUE(weight_dichotomy_check(d)) << d;
    EXPECT_THROW(weight_dichotomy_check(0), OutOfRange);
}

TEST(Filtration, Errors)
{
    EXPECT_THROW(dim_by_filtration(7, 4), CapacityError);
    BlockOptions tiny = exact();
    tiny.max_columns = 3;
    EXPECT_THROW(compute_block(5, WeightVector{4, 2, 1}, tiny), CapacityError);
}
