#pragma once

// Polynomials over F2 as finite sets of monomials.

#include "hitproblem/errors.hpp"
#include "hitproblem/monomial.hpp"

#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hitproblem {

/// A polynomial in P_k. Terms are kept sorted in DescendingOrder without
/// repeats; adding a monomial twice cancels it.
class Polynomial
{
  public:
    explicit Polynomial(int k = 1) : k_(k)
    {
        if (k < 1 || k > kMaxVars)
            throw CapacityError("variable count outside [1,6]");
    }

    Polynomial(const Monomial& m) : k_(m.vars()), terms_{m} {}

    /// Sums the given monomials over F2 (pairs cancel).
    Polynomial(int k, std::vector<Monomial> terms) : k_(k)
    {
        for (const auto& t : terms)
            if (t.vars() != k)
                throw ArityMismatch("term arity differs from polynomial arity");
        terms_ = std::move(terms);
        canonicalize();
    }

    static Polynomial zero(int k) { return Polynomial(k); }
    static Polynomial one(int k) { return Polynomial(Monomial(k)); }
    // The degree-one variable x_{j+1}.
    static Polynomial variable(int k, int j)
    {
        Monomial m(k);
        m.set(j, 1);
        return Polynomial(m);
    }

    int vars() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool contains(const Monomial& m) const { return std::binary_search(terms_.begin(), terms_.end(), m, DescendingOrder{}); }

    bool is_homogeneous() const
    {
        for (const auto& t : terms_)
            if (t.degree() != terms_.front().degree())
                return false;
        return true;
    }

    // Degree of a homogeneous polynomial; 0 for the zero polynomial.
    unsigned degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

    // The largest term.
    const Monomial& leading() const
    {
        if (terms_.empty())
            throw OutOfRange("zero polynomial has no leading term");
        return terms_.front();
    }

    Polynomial& operator+=(const Polynomial& g)
    {
        *this = add(*this, g);
        return *this;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) { return multiply(f, g); }
    friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

    /// Symmetric difference of the term sets.
    static Polynomial add(const Polynomial& f, const Polynomial& g)
    {
        if (f.k_ != g.k_)
            throw ArityMismatch("adding polynomials in different variable counts");
        Polynomial r(f.k_);
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::set_symmetric_difference(f.terms_.begin(), f.terms_.end(), g.terms_.begin(), g.terms_.end(),
                                      std::back_inserter(r.terms_), DescendingOrder{});
        return r;
    }

    static Polynomial multiply(const Polynomial& f, const Polynomial& g)
    {
        if (f.k_ != g.k_)
            throw ArityMismatch("multiplying polynomials in different variable counts");
        std::unordered_set<Monomial, MonomialHash> acc;
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) {
                Monomial m = times(a, b);
                if (auto [it, fresh] = acc.insert(m); !fresh)
                    acc.erase(it);
            }
        return Polynomial(f.k_, std::vector<Monomial>(acc.begin(), acc.end()));
    }

    // Monomial product; throws CapacityError on exponent overflow.
    static Monomial times(const Monomial& a, const Monomial& b)
    {
        if (a.vars() != b.vars())
            throw ArityMismatch("multiplying monomials in different variable counts");
        Monomial m(a.vars());
        for (int j = 0; j < a.vars(); ++j)
            m.set(j, a[j] + b[j]);
        return m;
    }

    /// f^{2^t}: every exponent multiplied by 2^t.
    Polynomial frobenius(int t) const
    {
        Polynomial r(k_);
        r.terms_.reserve(terms_.size());
        for (const auto& m : terms_) {
            Monomial s(k_);
            for (int j = 0; j < k_; ++j)
                s.set(j, static_cast<unsigned>(m[j]) << t);
            r.terms_.push_back(s);
        }
        return r;  // scaling exponents preserves the order within a degree
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty())
                s += " + ";
            s += t.pretty();
        }
        return s;
    }

  private:
    void canonicalize()
    {
        sort_descending(terms_);
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i;
            while (j < terms_.size() && terms_[j] == terms_[i])
                ++j;
            if ((j - i) & 1u)
                out.push_back(terms_[i]);
            i = j;
        }
        terms_ = std::move(out);
    }

    int k_;
    std::vector<Monomial> terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g)
{
    return Polynomial::add(f, g);
}

inline Polynomial multiply(const Polynomial& f, const Polynomial& g)
{
    return Polynomial::multiply(f, g);
}

/// Applies the algebra homomorphism x_j -> images[j] into P_{target_k}.
/// Powers are expanded dyadically: p^a = prod over set bits t of p^{2^t},
/// and p^{2^t} is the Frobenius image.
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, int target_k)
{
    if (static_cast<int>(images.size()) != f.vars())
        throw ArityMismatch("substitution needs one image per source variable");
    for (const auto& img : images)
        if (img.vars() != target_k)
            throw ArityMismatch("substitution image lives in the wrong number of variables");

    std::map<std::pair<int, unsigned>, Polynomial> power_cache;
    auto power = [&](int j, unsigned a) -> const Polynomial& {
        auto key = std::make_pair(j, a);
        if (auto it = power_cache.find(key); it != power_cache.end())
            return it->second;
        Polynomial r = Polynomial::one(target_k);
        for (int t = 0; (a >> t) != 0; ++t)
            if (a >> t & 1u)
                r = multiply(r, images[j].frobenius(t));
        return power_cache.emplace(key, std::move(r)).first->second;
    };

    std::unordered_set<Monomial, MonomialHash> acc;
    for (const auto& m : f) {
        Polynomial term = Polynomial::one(target_k);
        for (int j = 0; j < f.vars() && !term.is_zero(); ++j)
            if (m[j])
                term = multiply(term, power(j, m[j]));
        for (const auto& t : term)
            if (auto [it, fresh] = acc.insert(t); !fresh)
                acc.erase(it);
    }
    return Polynomial(target_k, std::vector<Monomial>(acc.begin(), acc.end()));
}

}  // namespace hitproblem
