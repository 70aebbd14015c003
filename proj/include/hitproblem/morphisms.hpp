#pragma once

// Maps between P_{k-1} and P_k: the variable insertions f_i, the monomial maps
// phi_(i;I), the substitutions p_(i;I) and the sets Phi^0, Phi^+, Phi.
// Variable indices in this header are 1-based, as in the notation (i;I).

#include "hitproblem/errors.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hitproblem {

/// A pair (i;I) with I = (i_1 < ... < i_r), i < i_1, i_r <= k.
struct IndexPair
{
    int i = 1;
    std::vector<int> I;

    int length() const { return static_cast<int>(I.size()); }

    /// Throws OutOfRange unless (i;I) lies in N_k.
    void validate(int k) const
    {
        if (i < 1 || i > k)
            throw OutOfRange("index i=" + std::to_string(i) + " outside [1," + std::to_string(k) + "]");
        if (length() >= k)
            throw OutOfRange("I is too long for N_" + std::to_string(k));
        int prev = i;
        for (int s : I) {
            if (s <= prev || s > k)
                throw OutOfRange("I must be strictly increasing in (i," + std::to_string(k) + "]: " + to_string());
            prev = s;
        }
    }

    /// "i;(i1,i2,...)", with "i;()" for empty I.
    std::string to_string() const
    {
        std::string s = std::to_string(i) + ";(";
        for (std::size_t t = 0; t < I.size(); ++t)
            s += (t ? "," : "") + std::to_string(I[t]);
        return s + ")";
    }

    /// Accepts "1;(2,3)", "1;()", "1" and "1;2,3".
    static IndexPair parse(std::string_view text)
    {
        IndexPair p;
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '(' && c != ')')
                s += c;
        auto semi = s.find(';');
        auto num = [&](const std::string& t) {
            if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad index '" + t + "' in pair '" + std::string(text) + "'");
            return std::stoi(t);
        };
        p.i = num(s.substr(0, semi));
        if (semi != std::string::npos) {
            std::string rest = s.substr(semi + 1);
            std::size_t pos = 0;
            while (pos < rest.size()) {
                auto comma = rest.find(',', pos);
                if (comma == std::string::npos)
                    comma = rest.size();
                p.I.push_back(num(rest.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
        return p;
    }

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// N_k ordered by i, then I by length, then lexicographically.
inline std::vector<IndexPair> enumerate_pairs(int k)
{
    std::vector<IndexPair> out;
    for (int i = 1; i <= k; ++i) {
        const int avail = k - i;
        std::vector<std::vector<int>> subsets;
        for (unsigned mask = 0; mask < (1u << avail); ++mask) {
            std::vector<int> I;
            for (int b = 0; b < avail; ++b)
                if (mask >> b & 1u)
                    I.push_back(i + 1 + b);
            if (static_cast<int>(I.size()) < k)
                subsets.push_back(std::move(I));
        }
        std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        for (auto& I : subsets)
            out.push_back(IndexPair{i, std::move(I)});
    }
    return out;
}

namespace detail {
    inline void require_insert_index(int i, int k)
    {
        if (k < 2 || k > kMaxVars)
            throw CapacityError("maps P_{k-1} -> P_k need 2 <= k <= 6");
        if (i < 1 || i > k)
            throw OutOfRange("index i=" + std::to_string(i) + " outside [1," + std::to_string(k) + "]");
    }

    inline bool bit(unsigned a, int t) { return t >= 0 && (a >> t & 1u); }
}  // namespace detail

/// f_i on a monomial of P_{k-1}: x_j -> x_j (j < i), x_j -> x_{j+1} (j >= i).
inline Monomial f_i(int i, const Monomial& y)
{
    const int k = y.vars() + 1;
    detail::require_insert_index(i, k);
    Monomial x(k);
    for (int j = 1; j < k; ++j)
        x.set(j < i ? j - 1 : j, y[j - 1]);
    return x;
}

inline Polynomial f_i(int i, const Polynomial& y)
{
    std::vector<Monomial> terms;
    for (const auto& m : y)
        terms.push_back(f_i(i, m));
    return Polynomial(y.vars() + 1, std::move(terms));
}

/// Whether x in P_{k-1} is u-compatible with (i;I) in N_k. For I empty only
/// u = 1 is allowed and holds by convention.
inline bool u_compatible(const Monomial& x, const IndexPair& pair, int u)
{
    const int k = x.vars() + 1;
    pair.validate(k);
    const int r = pair.length();
    if (u < 1 || u > std::max(r, 1))
        throw OutOfRange("u=" + std::to_string(u) + " outside [1," + std::to_string(std::max(r, 1)) + "] for " +
                         pair.to_string());
    if (r == 0)
        return true;
    const unsigned full = (1u << r) - 1;
    auto nu = [&](int t) { return x[pair.I[static_cast<std::size_t>(t - 1)] - 2]; };  // nu_{i_t - 1}(x)
    for (int t = 1; t < u; ++t)
        if (nu(t) != full)
            return false;
    if (nu(u) <= full)
        return false;
    for (int t = 1; t <= u; ++t)
        if (!detail::bit(nu(u), r - t))
            return false;
    for (int t = u + 1; t <= r; ++t)
        if (!detail::bit(nu(t), r - t))
            return false;
    return true;
}

/// The u for which x is u-compatible with pair, if any.
inline std::optional<int> compatible_u(const Monomial& x, const IndexPair& pair)
{
    for (int u = 1; u <= std::max(pair.length(), 1); ++u)
        if (u_compatible(x, pair, u))
            return u;
    return std::nullopt;
}

/// phi_(i;I)(x) = x_i^{2^r-1} f_i(x) / x_(I,u), or nullopt (zero) when x is
/// compatible with no u.
inline std::optional<Monomial> phi(const IndexPair& pair, const Monomial& x)
{
    const int k = x.vars() + 1;
    detail::require_insert_index(pair.i, k);
    auto u = compatible_u(x, pair);
    if (!u)
        return std::nullopt;
    const int r = pair.length();
    Monomial out = f_i(pair.i, x);
    out.set(pair.i - 1, (1u << r) - 1);
    auto divide = [&](int var, unsigned e) {
        if (out[var - 1] < e)
            throw InvariantViolation("phi" + pair.to_string() + "(" + x.to_string() + ") is not an exact quotient");
        out.set(var - 1, out[var - 1] - e);
    };
    if (r > 0) {
        unsigned lead = 0;
        for (int t = 1; t <= *u; ++t)
            lead += 1u << (r - t);
        divide(pair.I[static_cast<std::size_t>(*u - 1)], lead);
        for (int t = *u + 1; t <= r; ++t)
            divide(pair.I[static_cast<std::size_t>(t - 1)], 1u << (r - t));
    }
    return out;
}

/// p_(i;I): P_k -> P_{k-1}, x_j -> x_j (j < i), x_i -> sum_{s in I} x_{s-1},
/// x_j -> x_{j-1} (j > i).
inline Polynomial p_map(const IndexPair& pair, const Polynomial& f)
{
    const int k = f.vars();
    detail::require_insert_index(pair.i, k);
    pair.validate(k);
    std::vector<Polynomial> images;
    for (int j = 1; j <= k; ++j) {
        if (j < pair.i)
            images.push_back(Polynomial::variable(k - 1, j - 1));
        else if (j > pair.i)
            images.push_back(Polynomial::variable(k - 1, j - 2));
        else {
            Polynomial s(k - 1);
            for (int t : pair.I)
                s += Polynomial::variable(k - 1, t - 2);
            images.push_back(std::move(s));
        }
    }
    return substitute(f, images, k - 1);
}

struct PhiSets
{
    std::vector<Monomial> zero;  // Phi^0(B)
    std::vector<Monomial> plus;  // Phi^+(B)
    std::vector<Monomial> all;   // Phi(B)
};

/// Phi^0, Phi^+ and Phi of a set B of monomials in k-1 variables, each sorted descending.
inline PhiSets phi_sets(const std::vector<Monomial>& B, int k)
{
    std::set<Monomial, DescendingOrder> zero, plus;
    for (const auto& b : B) {
        if (b.vars() != k - 1)
            throw ArityMismatch("phi_sets expects monomials in " + std::to_string(k - 1) + " variables");
        for (int i = 1; i <= k; ++i)
            zero.insert(f_i(i, b));
    }
    for (const auto& pair : enumerate_pairs(k)) {
        if (pair.length() == 0)
            continue;
        for (const auto& b : B)
            if (auto m = phi(pair, b); m && m->all_positive())
                plus.insert(*m);
    }
    PhiSets out;
    out.zero.assign(zero.begin(), zero.end());
    out.plus.assign(plus.begin(), plus.end());
    std::set<Monomial, DescendingOrder> all(zero.begin(), zero.end());
    all.insert(plus.begin(), plus.end());
    out.all.assign(all.begin(), all.end());
    return out;
}

}  // namespace hitproblem
