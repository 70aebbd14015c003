#pragma once

// Action of the Steenrod squares on P_k through the Cartan formula, and the
// spanning set {Sq^{2^u}(m)} of the hit space in a given degree.

#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace hitproblem {

/// A single square Sq^i. Sq^0 is the identity.
struct SteenrodSquare
{
    unsigned i = 0;
};

/// Sq^i(x^a) = C(a,i) x^{a+i}. Returns the exponent a+i when C(a,i) is odd
/// (Lucas: the bits of i are a subset of those of a), nullopt otherwise.
constexpr std::optional<unsigned> sq_on_power(unsigned i, unsigned a)
{
    if ((i & ~a) != 0)
        return std::nullopt;
    return a + i;
}

/// Visits every term of Sq^i(m). Distinct exponent splits give distinct
/// terms, so the visited monomials never repeat.
template <class Fn>
void for_each_sq_term(unsigned i, const Monomial& m, Fn&& fn)
{
    const int k = m.vars();
    if (i > m.degree())
        return;
    Monomial out = m;
    // Split i = sum b_j with each b_j a bit-subset of a_j.
    auto rec = [&](auto&& self, int j, unsigned rest) -> void {
        const unsigned a = m[j];
        if (j == k - 1) {
            if ((rest & ~a) != 0)
                return;
            if (a + rest > kMaxExponent)
                throw CapacityError("Sq image overflows the 16-bit exponent bound");
            out.set(j, a + rest);
            fn(static_cast<const Monomial&>(out));
            return;
        }
        // Enumerate submasks b of a with b <= rest, largest first.
        unsigned b = a;
        while (true) {
            if (b <= rest) {
                if (a + b > kMaxExponent)
                    throw CapacityError("Sq image overflows the 16-bit exponent bound");
                out.set(j, a + b);
                self(self, j + 1, rest - b);
            }
            if (b == 0)
                break;
            b = (b - 1) & a;
        }
        out.set(j, a);
    };
    rec(rec, 0, i);
}

inline Polynomial sq(unsigned i, const Monomial& m)
{
    std::vector<Monomial> terms;
    for_each_sq_term(i, m, [&](const Monomial& t) { terms.push_back(t); });
    return Polynomial(m.vars(), std::move(terms));
}

/// Sq^i extended additively to polynomials.
inline Polynomial sq(unsigned i, const Polynomial& f)
{
    std::unordered_set<Monomial, MonomialHash> acc;
    for (const auto& m : f)
        for_each_sq_term(i, m, [&](const Monomial& t) {
            if (auto [it, fresh] = acc.insert(t); !fresh)
                acc.erase(it);
        });
    return Polynomial(f.vars(), std::vector<Monomial>(acc.begin(), acc.end()));
}

inline Polynomial sq(SteenrodSquare s, const Polynomial& f)
{
    return sq(s.i, f);
}

/// Visits every monomial m such that y occurs in Sq^i(m), i.e. y - m splits
/// i into bit-subsets of the exponents of m.
template <class Fn>
void for_each_sq_preimage(unsigned i, const Monomial& y, Fn&& fn)
{
    const int k = y.vars();
    if (i > y.degree())
        return;
    Monomial m = y;
    auto rec = [&](auto&& self, int j, unsigned rest) -> void {
        const unsigned c = y[j];
        if (j == k - 1) {
            if (rest > c)
                return;
            unsigned a = c - rest;
            if ((rest & ~a) != 0)
                return;
            m.set(j, a);
            fn(static_cast<const Monomial&>(m));
            m.set(j, c);
            return;
        }
        unsigned top = std::min(rest, c);
        for (unsigned b = 0; b <= top; ++b) {
            unsigned a = c - b;
            if ((b & ~a) != 0)
                continue;
            m.set(j, a);
            self(self, j + 1, rest - b);
        }
        m.set(j, c);
    };
    rec(rec, 0, i);
}

/// One spanning element Sq^{2^u}(m) of the hit space.
struct HitGenerator
{
    unsigned u;  // the square is Sq^{2^u}
    Monomial source;
};

/// Visits (u, m) for every u with 2^u <= n and every monomial m of degree n - 2^u.
template <class Fn>
void for_each_hit_generator(int k, unsigned n, Fn&& fn)
{
    for (unsigned u = 0; (1u << u) <= n; ++u)
        for_each_monomial(k, n - (1u << u), [&](const Monomial& m) { fn(HitGenerator{u, m}); });
}

/// Number of generators visited by for_each_hit_generator.
inline std::uint64_t hit_generator_count(int k, unsigned n)
{
    std::uint64_t total = 0;
    for (unsigned u = 0; (1u << u) <= n; ++u)
        total += monomial_count(k, n - (1u << u));
    return total;
}

/// The generator polynomials Sq^{2^u}(m) spanning (A^+ P_k)_n, materialized.
/// Only sensible for small slices; the engines stream instead.
inline std::vector<Polynomial> hit_generators(int k, unsigned n)
{
    std::vector<Polynomial> out;
    for_each_hit_generator(k, n, [&](const HitGenerator& g) { out.push_back(sq(1u << g.u, g.source)); });
    return out;
}

}  // namespace hitproblem
