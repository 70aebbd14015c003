#pragma once

// Kameko's squaring map x_1...x_k y^2 -> y, its section, the isomorphism check
// (QP_k)_{2m+k} -> (QP_k)_m when mu(2m+k) = k, and the reduction of a degree to
// the form s(2^d - 1) + 2^d m.

#include "hitproblem/errors.hpp"
#include "hitproblem/gf2.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"
#include "hitproblem/quotient.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hitproblem {

/// y with x = x_1...x_k y^2, or nullopt (zero) if some exponent is even.
inline std::optional<Monomial> kameko_down(const Monomial& x)
{
    Monomial y(x.vars());
    for (int j = 0; j < x.vars(); ++j) {
        if (x[j] % 2 == 0)
            return std::nullopt;
        y.set(j, (x[j] - 1) / 2);
    }
    return y;
}

/// Termwise extension to polynomials.
inline Polynomial kameko_down(const Polynomial& f)
{
    std::vector<Monomial> terms;
    for (const auto& t : f)
        if (auto y = kameko_down(t))
            terms.push_back(*y);
    return Polynomial(f.vars(), std::move(terms));
}

/// x_1...x_k y^2.
inline Monomial kameko_up(const Monomial& y)
{
    Monomial x(y.vars());
    for (int j = 0; j < y.vars(); ++j) {
        std::uint64_t e = 2 * std::uint64_t(y[j]) + 1;
        if (e > kMaxExponent)
            throw CapacityError("Kameko lift overflows the 16-bit exponent bound");
        x.set(j, static_cast<unsigned>(e));
    }
    return x;
}

struct KamekoReport
{
    int k = 0;
    unsigned m = 0;
    unsigned source_degree = 0;  // 2m + k
    bool criterion_met = false;  // mu(2m+k) == k
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t induced_rank = 0;
    // Some class with two distinct representatives was mapped by both; true
    // when they landed in the same class (or no such class was sampled).
    bool representative_independent = true;
    std::size_t representatives_checked = 0;
    bool isomorphism = false;
};

/// Computes both slices and the rank of the induced map on admissible
/// representatives. isomorphism is only asserted when the criterion is met.
inline KamekoReport kameko_iso_check(int k, unsigned m, BasisCache* cache = nullptr, const BasisOptions& opts = {})
{
    KamekoReport r;
    r.k = k;
    r.m = m;
    r.source_degree = 2 * m + static_cast<unsigned>(k);
    r.criterion_met = mu(r.source_degree) == static_cast<unsigned>(k);

    std::shared_ptr<const AdmissibleBasis> src, dst;
    if (cache) {
        src = cache->get(k, r.source_degree);
        dst = cache->get(k, m);
    }
    else {
        src = std::make_shared<const AdmissibleBasis>(compute_basis(k, r.source_degree, opts));
        dst = std::make_shared<const AdmissibleBasis>(compute_basis(k, m, opts));
    }
    r.source_dim = src->dimension();
    r.target_dim = dst->dimension();

    EchelonBasis image(dst->context().size());
    for (const auto& x : src->admissibles()) {
        Polynomial y = kameko_down(Polynomial(x));
        image.insert(dst->hit_space().normal_form(dst->to_row(y)));
    }
    r.induced_rank = image.rank();

    // A second representative of [x]: x + (a hit element). Use x + Sq^1(w)
    // for a monomial w one degree lower, whenever that image is nonzero.
    const auto& ctx = src->context();
    for (const auto& x : src->admissibles()) {
        if (r.representatives_checked >= 8 || r.source_degree == 0)
            break;
        std::optional<Polynomial> hit;
        for (std::size_t c = 0; c < ctx.size() && !hit; ++c) {
            Monomial w = ctx.unrank(c);
            if (w[0] == 0)
                continue;
            w.set(0, w[0] - 1);
            Polynomial h = sq(1, w);
            if (!h.is_zero())
                hit = std::move(h);
        }
        if (!hit)
            break;
        Polynomial other = add(Polynomial(x), *hit);
        auto a = dst->hit_space().normal_form(dst->to_row(kameko_down(Polynomial(x))));
        auto b = dst->hit_space().normal_form(dst->to_row(kameko_down(other)));
        if (!(a == b))
            r.representative_independent = false;
        ++r.representatives_checked;
    }
    r.isomorphism = r.criterion_met && r.source_dim == r.target_dim && r.induced_rank == r.target_dim &&
                    r.representative_independent;
    return r;
}

/// One step n = s(2^d - 1) + 2^d m.
struct Reduction
{
    unsigned s = 0;
    unsigned d = 0;
    std::uint64_t m = 0;
};

struct ReductionChain
{
    std::uint64_t n = 0;
    int k = 0;
    bool wood = false;  // mu(n) > k: (QP_k)_n = 0
    std::vector<Reduction> steps;  // d descending
};

/// Every decomposition n = s(2^d - 1) + 2^d m with 1 <= s < k, d >= 1, m >= 0.
inline ReductionChain reduce_degree(int k, std::uint64_t n)
{
    if (n < 1)
        throw OutOfRange("reduce_degree needs n >= 1");
    ReductionChain chain;
    chain.n = n;
    chain.k = k;
    chain.wood = mu(n) > static_cast<unsigned>(k);
    if (chain.wood)
        return chain;
    for (unsigned d = 1; (std::uint64_t(1) << d) - 1 <= n; ++d) {
        const std::uint64_t block = (std::uint64_t(1) << d) - 1;
        for (unsigned s = 1; s < static_cast<unsigned>(k) && s * block <= n; ++s) {
            std::uint64_t rest = n - s * block;
            if (rest % (std::uint64_t(1) << d) == 0)
                chain.steps.push_back(Reduction{s, d, rest >> d});
        }
    }
    std::sort(chain.steps.begin(), chain.steps.end(), [](const Reduction& a, const Reduction& b) {
        return a.d != b.d ? a.d > b.d : a.s < b.s;
    });
    return chain;
}

}  // namespace hitproblem
