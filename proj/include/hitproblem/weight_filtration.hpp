#pragma once

// Weight-graded computation of QP_k: (QP_k)_n is the direct sum of the blocks
// QP_k(omega) = P_k(omega) / ((A^+P_k n P_k(omega)) + P_k^-(omega)) over the
// weight vectors omega of degree n. Each block is computed independently.

#include "hitproblem/engine.hpp"
#include "hitproblem/errors.hpp"
#include "hitproblem/gf2.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"
#include "hitproblem/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace hitproblem {

/// All weight vectors of degree n with entries in [0, k], descending.
inline std::vector<WeightVector> enumerate_weights(int k, std::uint64_t n)
{
    std::vector<WeightVector> out;
    std::vector<unsigned> cur;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == kMaxPlanes)
            return;
        for (unsigned w = 0; w <= static_cast<unsigned>(k) && w <= rest; ++w) {
            if ((rest - w) % 2)
                continue;
            cur.push_back(w);
            rec((rest - w) / 2);
            cur.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

enum class BlockMethod
{
    // Rows are Sq^{2^u}(m) with every term of weight <= omega, projected onto
    // the weight-omega terms. Rows reaching a heavier weight are skipped. This
    // misses relations that cancel through heavier weights, so the result is
    // only an upper bound (k=5, n=12, omega=(2,3,1) gives 70, true value 0).
    projection,
    // Exact: eliminate on all monomials of weight >= omega (a prefix of the
    // column order), projecting away lighter terms; QP_k(omega) is read off the
    // weight-omega columns.
    upset,
    // No elimination: the block is zero by Singer's criterion.
    singer,
};

inline std::string to_string(BlockMethod m)
{
    switch (m) {
    case BlockMethod::projection: return "projection";
    case BlockMethod::upset: return "upset";
    case BlockMethod::singer: return "singer";
    }
    return "?";
}

enum class SingerPolicy
{
    never,       // always eliminate
    always,      // blocks below the minimal spike weight are zero, no elimination
    when_large,  // use the criterion only when elimination would exceed singer_budget columns
};

struct BlockOptions
{
    BlockMethod method = BlockMethod::upset;
    SingerPolicy singer = SingerPolicy::when_large;
    std::uint64_t singer_budget = 60'000;
    std::uint64_t max_columns = 2'000'000;
};

/// Number of monomials of weight exactly omega: prod_i C(k, omega_i).
inline std::uint64_t weight_block_size(int k, const WeightVector& omega)
{
    std::uint64_t total = 1;
    for (unsigned w : omega.entries()) {
        std::uint64_t c = 1;
        for (unsigned t = 1; t <= w; ++t)
            c = c * static_cast<std::uint64_t>(k - static_cast<int>(t) + 1) / t;
        total *= c;
    }
    return total;
}

/// Number of monomials of weight >= omega and the same degree.
inline std::uint64_t upset_size(int k, const WeightVector& omega)
{
    std::uint64_t total = 0;
    for (const auto& w : enumerate_weights(k, omega.degree()))
        if (w >= omega)
            total += weight_block_size(k, w);
    return total;
}

/// One block QP_k(omega).
struct WeightBlock
{
    int k = 0;
    WeightVector omega;
    BlockMethod method = BlockMethod::projection;
    // Monomials of weight exactly omega, descending.
    std::vector<Monomial> columns;
    // Relations among the columns modulo P_k^-(omega); empty for the singer method.
    EchelonBasis reduced_hit;
    std::size_t rank = 0;
    EliminationStats stats;

    std::size_t size() const { return columns.size(); }
    std::size_t dimension() const { return columns.size() - rank; }

    /// B_k(omega): the non-pivot columns.
    std::vector<Monomial> admissibles() const
    {
        std::vector<Monomial> out;
        if (method == BlockMethod::singer)
            return out;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (!reduced_hit.is_pivot(c))
                out.push_back(columns[c]);
        return out;
    }

    /// Representative of [f]_omega supported on admissible columns. Terms of
    /// lower weight are dropped; heavier terms are rejected.
    Polynomial normal_form(const Polynomial& f) const
    {
        if (method == BlockMethod::singer)
            return Polynomial(k);
        ColumnIndex index(columns);
        BitRow row(columns.size());
        for (const auto& t : f) {
            auto w = WeightVector::of(t);
            if (w < omega)
                continue;
            if (w > omega)
                throw DegreeMismatch("term " + t.to_string() + " is not in P_k(omega)");
            row.flip(static_cast<std::size_t>(index.find(t)));
        }
        std::vector<Monomial> terms;
        for (auto c : reduced_hit.normal_form(std::move(row)).ones())
            terms.push_back(index[c]);
        return Polynomial(k, std::move(terms));
    }
};

namespace detail {
    inline bool below_minimal_spike(int k, const WeightVector& omega)
    {
        auto n = omega.degree();
        if (mu(n) > static_cast<unsigned>(k))
            return true;  // Wood: everything is hit
        auto z = minimal_spike(k, n);
        return omega < WeightVector::of(*z);
    }

    inline unsigned squares_for_degree(std::uint64_t n)
    {
        unsigned u = 0;
        while ((std::uint64_t(1) << u) <= n)
            ++u;
        return u;
    }
}  // namespace detail

/// Computes QP_k(omega).
inline WeightBlock compute_block(int k, const WeightVector& omega, const BlockOptions& opts = {})
{
    detail::require_vars(k);
    WeightBlock block;
    block.k = k;
    block.omega = omega;
    block.columns = monomials_of_weight(k, omega);
    block.reduced_hit = EchelonBasis(block.columns.size());
    const auto n = omega.degree();

    const std::uint64_t cost =
        opts.method == BlockMethod::upset ? upset_size(k, omega) : weight_block_size(k, omega);
    const bool use_singer = opts.method == BlockMethod::singer || opts.singer == SingerPolicy::always ||
                            (opts.singer == SingerPolicy::when_large && cost > opts.singer_budget);
    if (use_singer && detail::below_minimal_spike(k, omega)) {
        block.method = BlockMethod::singer;
        block.rank = block.columns.size();
        return block;
    }
    block.method = opts.method == BlockMethod::singer ? BlockMethod::upset : opts.method;
    if (block.columns.empty())
        return block;

    const unsigned max_u = detail::squares_for_degree(n);
    if (block.method == BlockMethod::projection) {
        ColumnIndex cols(block.columns);
        if (cols.size() > opts.max_columns)
            throw CapacityError("weight block " + omega.to_string() + " has " + std::to_string(cols.size()) + " columns");
        auto classify = [&](const Monomial& t) -> std::int64_t {
            auto w = WeightVector::of(t);
            if (w == omega)
                return cols.find(t);
            return w < omega ? kDropTerm : kRejectRow;
        };
        block.reduced_hit = restricted_elimination(
            cols, max_u, classify, [](const EchelonBasis& b) { return b.rank() == b.columns(); }, &block.stats);
        block.rank = block.reduced_hit.rank();
        return block;
    }

    // upset: columns are every monomial of weight >= omega; the weight-omega
    // monomials form the tail of the column order.
    std::vector<Monomial> up;
    for (const auto& w : enumerate_weights(k, n))
        if (w > omega) {
            auto ms = monomials_of_weight(k, w);
            up.insert(up.end(), ms.begin(), ms.end());
        }
    const std::size_t offset = up.size();
    up.insert(up.end(), block.columns.begin(), block.columns.end());
    ColumnIndex cols(up);
    if (cols.size() > opts.max_columns)
        throw CapacityError("up-set of weight " + omega.to_string() + " has " + std::to_string(cols.size()) + " columns");
    // Discovery starts at the weight-omega columns; once all of them are
    // pivots the block is zero and nothing further can change that.
    std::size_t tail_pivots = 0;
    auto full = restricted_elimination(
        cols, max_u, [&](const Monomial& t) { return cols.find(t); },
        [&](const EchelonBasis& b) {
            if (*b.last_pivot() >= offset)
                ++tail_pivots;
            return tail_pivots == block.columns.size();
        },
        &block.stats, offset);
    // Rows whose pivot is a weight-omega column live entirely on those columns.
    for (std::size_t c = offset; c < cols.size(); ++c) {
        if (!full.is_pivot(c))
            continue;
        BitRow r = full.row_with_pivot(c);
        BitRow tail(block.columns.size());
        for (auto b : r.ones()) {
            if (b < offset)
                throw InvariantViolation("up-set row leaves its weight block");
            tail.flip(b - offset);
        }
        block.reduced_hit.insert(std::move(tail));
    }
    block.rank = block.reduced_hit.rank();
    return block;
}

/// Closed form for the top weight: dim QP_k(omega_{(k,d)}) = sum_{t=1}^{min(k,d)} C(k,t).
inline std::uint64_t top_weight_dimension(int k, int d)
{
    std::uint64_t total = 0, c = 1;
    for (int t = 1; t <= std::min(k, d); ++t) {
        c = c * static_cast<std::uint64_t>(k - t + 1) / static_cast<std::uint64_t>(t);
        total += c;
    }
    return total;
}

struct BlockSummary
{
    WeightVector omega;
    std::size_t block_size = 0;
    std::size_t rank = 0;
    std::size_t dim = 0;
    BlockMethod method = BlockMethod::projection;
};

struct FiltrationOptions
{
    BlockOptions block;
    unsigned jobs = 1;
    std::function<void(const BlockSummary&)> on_block;  // called from worker threads
};

struct FiltrationResult
{
    int k = 0;
    std::uint64_t n = 0;
    std::vector<BlockSummary> blocks;  // descending weight order
    std::size_t total() const
    {
        std::size_t t = 0;
        for (const auto& b : blocks)
            t += b.dim;
        return t;
    }
};

/// Computes every block of degree n; blocks run in parallel over opts.jobs workers.
inline FiltrationResult filtration(int k, std::uint64_t n, const FiltrationOptions& opts = {})
{
    detail::require_vars(k);
    FiltrationResult result;
    result.k = k;
    result.n = n;
    auto weights = enumerate_weights(k, n);
    result.blocks.resize(weights.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < weights.size(); i = next++) {
            try {
                auto b = compute_block(k, weights[i], opts.block);
                BlockSummary s{b.omega, b.size(), b.rank, b.dimension(), b.method};
                result.blocks[i] = s;
                if (opts.on_block)
                    opts.on_block(s);
            }
            catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return result;
}

/// dim (QP_k)_n as the sum of the block dimensions.
inline std::size_t dim_by_filtration(int k, std::uint64_t n, const FiltrationOptions& opts = {})
{
    return filtration(k, n, opts).total();
}

struct DichotomyReport
{
    int d = 0;
    bool holds = true;
    std::vector<BlockSummary> blocks;
};

/// For n = 4(2^d - 1) in P_5: every block other than omega_{(5,d)} and
/// bar omega_{(5,d)} has dimension zero.
inline DichotomyReport weight_dichotomy_report(int d, const FiltrationOptions& opts = {})
{
    if (d < 1)
        throw OutOfRange("dichotomy check needs d >= 1");
    const std::uint64_t n = 4 * ((std::uint64_t(1) << d) - 1);
    auto top = WeightVector::top(5, d), bar = WeightVector::bar(5, d);
    DichotomyReport report;
    report.d = d;
    report.blocks = filtration(5, n, opts).blocks;
    for (const auto& b : report.blocks)
        if (b.omega != top && b.omega != bar && b.dim != 0)
            report.holds = false;
    return report;
}

inline bool weight_dichotomy_check(int d, const FiltrationOptions& opts = {})
{
    return weight_dichotomy_report(d, opts).holds;
}

}  // namespace hitproblem
