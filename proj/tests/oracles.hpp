#pragma once

// Slow reference implementations used only by the tests.

#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using hitproblem::Monomial;
using hitproblem::Polynomial;

// C(n, r) mod 2 from Pascal's triangle.
inline int binom_mod2(int n, int r)
{
    static std::vector<std::vector<int>> table = [] {
        std::vector<std::vector<int>> t(300, std::vector<int>(300, 0));
        for (int a = 0; a < 300; ++a) {
            t[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                t[a][b] = (t[a - 1][b - 1] + t[a - 1][b]) % 2;
        }
        return t;
    }();
    if (r < 0 || r > n)
        return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

// Sq^i(m) as the degree-(deg m + i) part of the product over variables of
// sum_a C(e, a) x^{e+a}.
inline Polynomial sq(unsigned i, const Monomial& m)
{
    const int k = m.vars();
    std::map<std::vector<unsigned>, int> acc;
    std::vector<unsigned> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int j, unsigned rest) -> void {
        if (j == k) {
            if (rest == 0)
                acc[cur] ^= 1;
            return;
        }
        const unsigned e = m[j];
        for (unsigned a = 0; a <= rest && a <= e; ++a) {
            if (!binom_mod2(static_cast<int>(e), static_cast<int>(a)))
                continue;
            cur[static_cast<std::size_t>(j)] = e + a;
            self(self, j + 1, rest - a);
        }
    };
    rec(rec, 0, i);
    std::vector<Monomial> terms;
    for (const auto& [e, c] : acc)
        if (c) {
            Monomial t(k);
            for (int j = 0; j < k; ++j)
                t.set(j, e[static_cast<std::size_t>(j)]);
            terms.push_back(t);
        }
    return Polynomial(k, std::move(terms));
}

// Every exponent vector of degree n, by nested counting.
inline std::vector<Monomial> monomials(int k, unsigned n)
{
    std::vector<Monomial> out;
    std::vector<unsigned> e(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int j, unsigned rest) -> void {
        if (j == k - 1) {
            e[static_cast<std::size_t>(j)] = rest;
            Monomial m(k);
            for (int t = 0; t < k; ++t)
                m.set(t, e[static_cast<std::size_t>(t)]);
            out.push_back(m);
            return;
        }
        for (unsigned a = 0; a <= rest; ++a) {
            e[static_cast<std::size_t>(j)] = a;
            self(self, j + 1, rest - a);
        }
    };
    rec(rec, 0, n);
    return out;
}

// Digit sums of the exponents, computed by repeated halving.
inline std::vector<unsigned> weight(const Monomial& m)
{
    std::vector<unsigned> w;
    for (int j = 0; j < m.vars(); ++j) {
        unsigned a = m[j];
        for (std::size_t i = 0; a; ++i, a /= 2) {
            if (w.size() <= i)
                w.resize(i + 1, 0);
            w[i] += a % 2;
        }
    }
    while (!w.empty() && w.back() == 0)
        w.pop_back();
    return w;
}

// -1, 0, 1: weight first (zero padded, left-lex), then exponents left-lex.
inline int compare(const Monomial& x, const Monomial& y)
{
    auto wx = weight(x), wy = weight(y);
    std::size_t len = std::max(wx.size(), wy.size());
    wx.resize(len, 0);
    wy.resize(len, 0);
    if (wx != wy)
        return wx < wy ? -1 : 1;
    for (int j = 0; j < x.vars(); ++j)
        if (x[j] != y[j])
            return x[j] < y[j] ? -1 : 1;
    return 0;
}

// Rank over GF(2) of dense 0/1 rows.
inline std::size_t dense_rank(std::vector<std::vector<int>> rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c])
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t t = 0; t < cols; ++t)
                    rows[r][t] ^= rows[rank][t];
        ++rank;
    }
    return rank;
}

// dim (QP_k)_n from the dense rank of every Sq^i(m), 1 <= i <= n.
inline std::size_t qp_dim(int k, unsigned n)
{
    auto cols = monomials(k, n);
    std::map<Monomial, std::size_t, hitproblem::DescendingOrder> index;
    for (std::size_t c = 0; c < cols.size(); ++c)
        index[cols[c]] = c;
    std::vector<std::vector<int>> rows;
    for (unsigned i = 1; i <= n; ++i)
        for (const auto& m : monomials(k, n - i)) {
            std::vector<int> row(cols.size(), 0);
            for (const auto& t : oracle::sq(i, m))
                row[index.at(t)] ^= 1;
            rows.push_back(std::move(row));
        }
    return cols.size() - dense_rank(std::move(rows), cols.size());
}

// Smallest r with n a sum of r numbers 2^d - 1, by breadth-first search.
inline unsigned mu(unsigned n)
{
    if (n == 0)
        return 0;
    std::set<unsigned> level{0};
    for (unsigned r = 1;; ++r) {
        std::set<unsigned> next;
        for (unsigned s : level)
            for (unsigned d = 1; s + (1u << d) - 1 <= n; ++d)
                next.insert(s + (1u << d) - 1);
        if (next.count(n))
            return r;
        level = std::move(next);
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int k, unsigned n, int terms)
{
    std::vector<Monomial> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m(k);
        unsigned rest = n;
        for (int j = 0; j < k - 1; ++j) {
            unsigned a = static_cast<unsigned>(rng() % (rest + 1));
            m.set(j, a);
            rest -= a;
        }
        m.set(k - 1, rest);
        ts.push_back(m);
    }
    return Polynomial(k, std::move(ts));
}

}  // namespace oracle
