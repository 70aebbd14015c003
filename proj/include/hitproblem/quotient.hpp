#pragma once

// The hit-problem engine for a whole degree slice: admissible monomials,
// dim (QP_k)_n, normal forms modulo hit elements, and the fast filters.
//
// Columns are the monomials of degree n in descending order, so the pivot of
// a hit element is its largest monomial. A monomial is inadmissible exactly
// when its column is a pivot of the hit space; admissibles are the rest.

#include "hitproblem/engine.hpp"
#include "hitproblem/errors.hpp"
#include "hitproblem/gf2.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"
#include "hitproblem/steenrod.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace hitproblem {

struct BasisOptions
{
    // Monolithic computations refuse slices with more columns than this.
    std::uint64_t max_columns = 1'000'000;
    unsigned jobs = 1;
    // Progress callback (rows processed, total rows); may be empty.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

class AdmissibleBasis
{
  public:
    AdmissibleBasis(std::shared_ptr<const DegreeContext> ctx, EchelonBasis hit)
        : ctx_(std::move(ctx)), hit_(std::move(hit))
    {
        for (std::size_t c = 0; c < ctx_->size(); ++c)
            if (!hit_.is_pivot(c))
                admissibles_.push_back(ctx_->unrank(c));
    }

    int vars() const { return ctx_->vars(); }
    unsigned degree() const { return ctx_->degree(); }
    std::size_t dimension() const { return admissibles_.size(); }
    const DegreeContext& context() const { return *ctx_; }
    const EchelonBasis& hit_space() const { return hit_; }
    /// B_k(n) in descending order.
    const std::vector<Monomial>& admissibles() const { return admissibles_; }

    bool is_admissible(const Monomial& m) const { return !hit_.is_pivot(ctx_->rank(m)); }

    BitRow to_row(const Polynomial& f) const
    {
        if (f.vars() != vars())
            throw ArityMismatch("polynomial has " + std::to_string(f.vars()) + " variables, basis has " +
                                std::to_string(vars()));
        BitRow row(ctx_->size());
        for (const auto& t : f) {
            if (t.degree() != degree())
                throw DegreeMismatch("term of degree " + std::to_string(t.degree()) + " in a degree-" +
                                     std::to_string(degree()) + " computation");
            row.flip(ctx_->rank(t));
        }
        return row;
    }

    Polynomial to_polynomial(const BitRow& row) const
    {
        std::vector<Monomial> terms;
        for (auto c : row.ones())
            terms.push_back(ctx_->unrank(c));
        return Polynomial(vars(), std::move(terms));
    }

  private:
    std::shared_ptr<const DegreeContext> ctx_;
    EchelonBasis hit_;
    std::vector<Monomial> admissibles_;
};

namespace detail {
    inline void require_vars(int k)
    {
        if (k < 1 || k > kMaxVars)
            throw CapacityError("variable count " + std::to_string(k) + " outside [1,6]");
    }

    // Rows of Sq^{2^u}(m) as column-index lists, for a contiguous range of generators.
    inline void generator_rows(const DegreeContext& ctx, const std::vector<HitGenerator>& gens, std::size_t begin,
                               std::size_t end, std::vector<std::vector<std::uint32_t>>& out)
    {
        out.resize(end - begin);
        for (std::size_t g = begin; g < end; ++g) {
            auto& row = out[g - begin];
            row.clear();
            for_each_sq_term(1u << gens[g].u, gens[g].source,
                             [&](const Monomial& t) { row.push_back(static_cast<std::uint32_t>(ctx.rank(t))); });
        }
    }
}  // namespace detail

/// Computes B_k(n) by streaming every generator Sq^{2^u}(m) into an echelon basis.
inline AdmissibleBasis compute_basis(int k, unsigned n, const BasisOptions& opts = {})
{
    detail::require_vars(k);
    if (monomial_count(k, n) > opts.max_columns)
        throw CapacityError("degree slice (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ") has " +
                            std::to_string(monomial_count(k, n)) + " columns, above the monolithic cap of " +
                            std::to_string(opts.max_columns) + "; use the weight-filtration method");
    auto ctx = std::make_shared<const DegreeContext>(k, n, opts.max_columns);
    EchelonBasis hit(ctx->size());

    std::vector<HitGenerator> gens;
    gens.reserve(hit_generator_count(k, n));
    for_each_hit_generator(k, n, [&](const HitGenerator& g) { gens.push_back(g); });

    const unsigned jobs = std::max(1u, opts.jobs);
    const std::size_t batch = 4096 * jobs;
    std::vector<std::vector<std::vector<std::uint32_t>>> parts(jobs);
    for (std::size_t start = 0; start < gens.size(); start += batch) {
        std::size_t stop = std::min(gens.size(), start + batch);
        std::size_t per = (stop - start + jobs - 1) / jobs;
        if (jobs == 1) {
            detail::generator_rows(*ctx, gens, start, stop, parts[0]);
        }
        else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs; ++j) {
                std::size_t b = std::min(stop, start + j * per), e = std::min(stop, b + per);
                pool.emplace_back([&, b, e, j] { detail::generator_rows(*ctx, gens, b, e, parts[j]); });
            }
            for (auto& t : pool)
                t.join();
        }
        // Insertion order is the generator order regardless of jobs.
        for (unsigned j = 0; j < jobs; ++j)
            for (auto& row : parts[j])
                if (!row.empty())
                    hit.insert_indices(row);
        if (opts.progress)
            opts.progress(stop, gens.size());
    }
    return AdmissibleBasis(std::move(ctx), std::move(hit));
}

/// The unique representative of [f] supported on admissible monomials.
inline Polynomial normal_form_poly(const AdmissibleBasis& basis, const Polynomial& f)
{
    return basis.to_polynomial(basis.hit_space().normal_form(basis.to_row(f)));
}

inline bool is_hit(const AdmissibleBasis& basis, const Polynomial& f)
{
    return basis.hit_space().normal_form(basis.to_row(f)).none();
}

/// Wood: (QP_k)_n = 0 whenever mu(n) > k.
inline bool wood_filter(int k, std::uint64_t n)
{
    return mu(n) > static_cast<unsigned>(k);
}

/// Singer: x is hit if omega(x) < omega(z) for the minimal spike z of its degree.
/// A true result is certain; false means undecided. Throws Inapplicable when mu(n) > k.
inline bool singer_filter(const Monomial& x)
{
    auto z = minimal_spike(x.vars(), x.degree());
    if (!z)
        throw Inapplicable("Singer's criterion needs mu(n) <= k");
    return WeightVector::of(x) < WeightVector::of(*z);
}

/// Splits B_k(n) into monomials with some zero exponent (B^0) and all exponents positive (B^+).
inline std::pair<std::vector<Monomial>, std::vector<Monomial>> split_basis(const AdmissibleBasis& basis)
{
    std::vector<Monomial> zero, plus;
    for (const auto& m : basis.admissibles())
        (m.all_positive() ? plus : zero).push_back(m);
    return {std::move(zero), std::move(plus)};
}

/// Monomials of degree deg(x) in k variables that are >= x, descending.
inline std::vector<Monomial> monomials_at_least(const Monomial& x)
{
    std::vector<Monomial> out;
    for_each_monomial(x.vars(), x.degree(), [&](const Monomial& y) {
        if (order_compare(y, x) >= 0)
            out.push_back(y);
    });
    sort_descending(out);
    return out;
}

/// x is strictly inadmissible iff x lies in the span of the monomials below x
/// together with {Sq^u(h) : 1 <= u < 2^s}, s = max{i : omega_i(x) > 0}.
/// Since Sq^u with u < 2^s lies in the subalgebra generated by Sq^{2^j}, j < s,
/// the generators Sq^{2^j}(m), j < s, suffice. Only columns >= x matter: x is
/// in that span iff its column is a pivot of the projection onto them.
/// The unit monomial is never strictly inadmissible.
inline bool is_strictly_inadmissible(const Monomial& x, std::uint64_t max_columns = 1'000'000)
{
    const int s = x.plane_count();
    if (s == 0)
        return false;
    if (monomial_count(x.vars(), x.degree()) > 64 * max_columns)
        throw CapacityError("degree too large for the strict-inadmissibility check");
    ColumnIndex cols(monomials_at_least(x));
    if (cols.size() > max_columns)
        throw CapacityError("strict-inadmissibility check needs " + std::to_string(cols.size()) + " columns");
    const std::size_t target = cols.size() - 1;
    auto basis = restricted_elimination(
        cols, static_cast<unsigned>(s), [&](const Monomial& t) { return cols.find(t); },
        [&](const EchelonBasis& b) { return b.is_pivot(target); });
    return basis.is_pivot(target);
}

/// Thread-safe memo of computed bases per (k, n), optionally backed by
/// on-disk echelon checkpoints (one file per slice).
class BasisCache
{
  public:
    explicit BasisCache(BasisOptions opts = {}, std::filesystem::path checkpoint_dir = {})
        : opts_(std::move(opts)), dir_(std::move(checkpoint_dir))
    {
    }

    std::shared_ptr<const AdmissibleBasis> get(int k, unsigned n)
    {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(k, n);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        auto basis = load_or_compute(k, n);
        cache_.emplace(key, basis);
        return basis;
    }

    const BasisOptions& options() const { return opts_; }

  private:
    std::shared_ptr<const AdmissibleBasis> load_or_compute(int k, unsigned n)
    {
        std::filesystem::path file;
        if (!dir_.empty()) {
            file = dir_ / ("echelon_k" + std::to_string(k) + "_n" + std::to_string(n) + ".bin");
            if (std::filesystem::exists(file)) {
                std::ifstream in(file, std::ios::binary);
                auto hit = EchelonBasis::load(in);
                auto ctx = std::make_shared<const DegreeContext>(k, n, opts_.max_columns);
                if (hit.columns() == ctx->size())
                    return std::make_shared<const AdmissibleBasis>(std::move(ctx), std::move(hit));
            }
        }
        auto basis = std::make_shared<const AdmissibleBasis>(compute_basis(k, n, opts_));
        if (!file.empty()) {
            std::filesystem::create_directories(dir_);
            std::ofstream out(file, std::ios::binary);
            basis->hit_space().save(out);
        }
        return basis;
    }

    BasisOptions opts_;
    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<std::pair<int, unsigned>, std::shared_ptr<const AdmissibleBasis>> cache_;
};

}  // namespace hitproblem
