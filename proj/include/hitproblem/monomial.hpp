#pragma once

// Monomials of F2[x_1..x_k], their weight and exponent vectors, the
// weight-first monomial order, spikes, mu(n), and dense enumeration of a
// degree slice.

#include "hitproblem/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hitproblem {

inline constexpr int kMaxVars = 6;
inline constexpr unsigned kMaxExponent = 0xFFFF;
// Number of dyadic digits of a 16-bit exponent.
inline constexpr int kMaxPlanes = 16;

using Exponent = std::uint16_t;

// alpha_i(a): the i-th dyadic digit of a.
constexpr unsigned dyadic_digit(unsigned a, int i)
{
    return (a >> i) & 1u;
}

/// A monomial x_1^{a_1} ... x_k^{a_k}. Variables are addressed 0-based in
/// the API (index j stands for x_{j+1}).
class Monomial
{
  public:
    Monomial() = default;

    /// The unit monomial 1 in k variables.
    explicit Monomial(int k) : k_(checked_arity(k)) {}

    Monomial(std::initializer_list<unsigned> exps) : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

    explicit Monomial(std::span<const unsigned> exps) : k_(checked_arity(static_cast<int>(exps.size())))
    {
        for (std::size_t j = 0; j < exps.size(); ++j)
            set(static_cast<int>(j), exps[j]);
    }

    explicit Monomial(const std::vector<int>& exps) : k_(checked_arity(static_cast<int>(exps.size())))
    {
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (exps[j] < 0)
                throw OutOfRange("negative exponent");
            set(static_cast<int>(j), static_cast<unsigned>(exps[j]));
        }
    }

    int vars() const { return k_; }

    unsigned operator[](int j) const { return e_[j]; }

    void set(int j, unsigned a)
    {
        if (j < 0 || j >= k_)
            throw OutOfRange("variable index " + std::to_string(j) + " outside [0," + std::to_string(k_) + ")");
        if (a > kMaxExponent)
            throw CapacityError("exponent " + std::to_string(a) + " exceeds 16 bits");
        e_[j] = static_cast<Exponent>(a);
    }

    unsigned degree() const
    {
        unsigned s = 0;
        for (int j = 0; j < k_; ++j)
            s += e_[j];
        return s;
    }

    std::span<const Exponent> exponents() const { return {e_.data(), static_cast<std::size_t>(k_)}; }
    const std::array<Exponent, kMaxVars>& raw() const { return e_; }

    bool all_positive() const
    {
        for (int j = 0; j < k_; ++j)
            if (e_[j] == 0)
                return false;
        return true;
    }

    // Highest bit plane in use plus one, i.e. max{i : omega_i(x) > 0}.
    int plane_count() const
    {
        unsigned acc = 0;
        for (int j = 0; j < k_; ++j)
            acc |= e_[j];
        return acc == 0 ? 0 : std::bit_width(acc);
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.k_ == b.k_ && a.e_ == b.e_; }

    std::size_t hash() const
    {
        std::uint64_t lo = 0, hi = k_;
        for (int j = 0; j < 4; ++j)
            lo |= std::uint64_t(e_[j]) << (16 * j);
        hi |= std::uint64_t(e_[4]) << 8 | std::uint64_t(e_[5]) << 24;
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
        h ^= h >> 31;
        return static_cast<std::size_t>(h * 0xD6E8FEB86659FD93ull);
    }

    std::string to_string() const
    {
        std::string s;
        for (int j = 0; j < k_; ++j) {
            if (j)
                s += ' ';
            s += std::to_string(e_[j]);
        }
        return s;
    }

    // Readable form such as x1^7*x2^3*x3.
    std::string pretty() const
    {
        std::string s;
        for (int j = 0; j < k_; ++j) {
            if (!e_[j])
                continue;
            if (!s.empty())
                s += '*';
            s += "x" + std::to_string(j + 1);
            if (e_[j] > 1)
                s += "^" + std::to_string(e_[j]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    static std::uint8_t checked_arity(int k)
    {
        if (k < 1 || k > kMaxVars)
            throw CapacityError("variable count " + std::to_string(k) + " outside [1," + std::to_string(kMaxVars) + "]");
        return static_cast<std::uint8_t>(k);
    }

    std::array<Exponent, kMaxVars> e_{};
    std::uint8_t k_ = 0;
};

struct MonomialHash
{
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Weight vector (omega_1, omega_2, ...) with trailing zeros removed.
/// Ordered left-lexicographically, shorter vectors padded with zeros.
class WeightVector
{
  public:
    WeightVector() = default;

    WeightVector(std::initializer_list<unsigned> entries) : WeightVector(std::vector<unsigned>(entries)) {}

    explicit WeightVector(const std::vector<unsigned>& entries)
    {
        std::size_t i = 0;
        for (unsigned e : entries) {
            if (i >= kMaxPlanes) {
                if (e)
                    throw CapacityError("weight vector longer than " + std::to_string(kMaxPlanes) + " entries");
                continue;
            }
            if (e > 255)
                throw CapacityError("weight entry too large");
            w_[i++] = static_cast<std::uint8_t>(e);
        }
        normalize();
    }

    /// omega(x): entry i counts the variables whose exponent has dyadic digit i-1 set.
    static WeightVector of(const Monomial& x)
    {
        WeightVector w;
        for (int j = 0; j < x.vars(); ++j) {
            unsigned a = x[j];
            while (a) {
                int t = std::countr_zero(a);
                ++w.w_[t];
                a &= a - 1;
            }
        }
        w.normalize();
        return w;
    }

    /// omega_{(k,b)} = ((k-1)^{(b)}).
    static WeightVector top(int k, int b)
    {
        std::vector<unsigned> e(static_cast<std::size_t>(b), static_cast<unsigned>(k - 1));
        return WeightVector(e);
    }

    /// bar omega_{(k,b)} = ((k-1)^{(b-1)}, k-3, 1).
    static WeightVector bar(int k, int b)
    {
        if (k < 3 || b < 1)
            throw OutOfRange("bar weight needs k >= 3 and b >= 1");
        std::vector<unsigned> e(static_cast<std::size_t>(b - 1), static_cast<unsigned>(k - 1));
        e.push_back(static_cast<unsigned>(k - 3));
        e.push_back(1);
        return WeightVector(e);
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }
    // 1-based as in omega_i; zero beyond the stored length.
    unsigned at(std::size_t i) const { return (i >= 1 && i <= kMaxPlanes) ? w_[i - 1] : 0; }
    unsigned operator[](std::size_t idx) const { return w_[idx]; }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < len_; ++i)
            d += std::uint64_t(w_[i]) << i;
        return d;
    }

    std::vector<unsigned> entries() const { return {w_.begin(), w_.begin() + len_}; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b)
    {
        for (int i = 0; i < kMaxPlanes; ++i)
            if (a.w_[i] != b.w_[i])
                return a.w_[i] <=> b.w_[i];
        return std::strong_ordering::equal;
    }

    // Comma-separated flat form, e.g. "4,2,1"; empty weight prints as "".
    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < len_; ++i) {
            if (i)
                s += ',';
            s += std::to_string(w_[i]);
        }
        return s;
    }

    // Run-length form, e.g. (4,4,2,1) -> "4^(2),2,1".
    std::string to_run_length() const
    {
        std::string s;
        for (std::size_t i = 0; i < len_;) {
            std::size_t j = i;
            while (j < len_ && w_[j] == w_[i])
                ++j;
            if (!s.empty())
                s += ',';
            s += std::to_string(w_[i]);
            if (j - i > 1)
                s += "^(" + std::to_string(j - i) + ")";
            i = j;
        }
        return s;
    }

    /// Parses either the flat or the run-length form; surrounding parentheses are optional.
    static WeightVector parse(std::string_view text)
    {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                t += c;
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')' && t.find(")") == t.size() - 1)
            t = t.substr(1, t.size() - 2);
        std::vector<unsigned> out;
        if (t.empty())
            return WeightVector{};
        std::size_t pos = 0;
        while (pos <= t.size()) {
            std::size_t end = pos;
            int depth = 0;
            while (end < t.size() && (t[end] != ',' || depth)) {
                depth += (t[end] == '(') - (t[end] == ')');
                ++end;
            }
            std::string item = t.substr(pos, end - pos);
            unsigned reps = 1;
            auto caret = item.find('^');
            std::string value = item;
            if (caret != std::string::npos) {
                value = item.substr(0, caret);
                std::string r = item.substr(caret + 1);
                if (r.size() < 3 || r.front() != '(' || r.back() != ')')
                    throw ParseError("bad run-length item '" + item + "'");
                reps = parse_uint(r.substr(1, r.size() - 2));
            }
            unsigned v = parse_uint(value);
            for (unsigned i = 0; i < reps; ++i)
                out.push_back(v);
            if (end >= t.size())
                break;
            pos = end + 1;
        }
        return WeightVector(out);
    }

  private:
    static unsigned parse_uint(const std::string& s)
    {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("expected a non-negative integer, got '" + s + "'");
        return static_cast<unsigned>(std::stoul(s));
    }

    void normalize()
    {
        len_ = kMaxPlanes;
        while (len_ > 0 && w_[len_ - 1] == 0)
            --len_;
    }

    std::array<std::uint8_t, kMaxPlanes> w_{};
    std::uint8_t len_ = 0;
};

inline WeightVector weight_vector(const Monomial& x)
{
    return WeightVector::of(x);
}

namespace detail {
    inline void require_comparable(const Monomial& x, const Monomial& y)
    {
        if (x.vars() != y.vars())
            throw InvalidComparison("monomials have different variable counts");
        if (x.degree() != y.degree())
            throw InvalidComparison("monomials have different degrees");
    }
}  // namespace detail

/// Sort key realizing the monomial order: weight vector first, then the
/// exponent vector, both left-lexicographic with nu_1 most significant.
struct OrderKey
{
    WeightVector omega;
    std::array<Exponent, kMaxVars> sigma{};

    explicit OrderKey(const Monomial& x) : omega(WeightVector::of(x)), sigma(x.raw()) {}

    friend std::strong_ordering operator<=>(const OrderKey& a, const OrderKey& b)
    {
        if (auto c = a.omega <=> b.omega; c != 0)
            return c;
        return a.sigma <=> b.sigma;
    }
    friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

/// Unchecked order comparison; callers guarantee equal degree and arity.
inline std::strong_ordering order_compare(const Monomial& x, const Monomial& y)
{
    return OrderKey(x) <=> OrderKey(y);
}

/// Compares monomials of the same degree and arity. Throws InvalidComparison otherwise.
inline std::strong_ordering compare_monomials(const Monomial& x, const Monomial& y)
{
    detail::require_comparable(x, y);
    return order_compare(x, y);
}

/// Orders descending (largest first) by degree, then by the monomial order.
struct DescendingOrder
{
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return order_compare(a, b) > 0;
    }
};

inline void sort_descending(std::vector<Monomial>& v)
{
    std::vector<std::pair<OrderKey, Monomial>> keyed;
    keyed.reserve(v.size());
    for (auto& m : v)
        keyed.emplace_back(OrderKey(m), m);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.degree() != b.second.degree())
            return a.second.degree() > b.second.degree();
        return a.first > b.first;
    });
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = keyed[i].second;
}

namespace detail {
    // mu(n) for every n <= limit by dynamic programming over the last term.
    inline std::vector<std::uint8_t> mu_table(std::size_t limit)
    {
        std::vector<std::uint8_t> t(limit + 1, 0xFF);
        t[0] = 0;
        for (std::size_t n = 1; n <= limit; ++n) {
            unsigned best = 0xFF;
            for (std::size_t term = 1; term <= n; term = 2 * term + 1)
                best = std::min<unsigned>(best, t[n - term] + 1u);
            t[n] = static_cast<std::uint8_t>(best);
        }
        return t;
    }
}  // namespace detail

/// mu(n): the least r with n a sum of r numbers of the form 2^d - 1, d >= 1.
/// mu(0) = 0.
inline unsigned mu(std::uint64_t n)
{
    static const std::vector<std::uint8_t> table = detail::mu_table(std::size_t(kMaxVars) * kMaxExponent);
    if (n < table.size())
        return table[n];
    return detail::mu_table(n)[n];
}

/// True iff every exponent has the form 2^d - 1 (d >= 0).
inline bool is_spike(const Monomial& x)
{
    for (unsigned a : x.exponents())
        if ((a & (a + 1)) != 0)
            return false;
    return true;
}

/// The unique minimal spike of degree n in P_k, or nullopt when mu(n) > k.
/// Exponents 2^{d_1}-1, ..., 2^{d_r}-1 with d_1 > ... > d_{r-1} >= d_r > 0.
inline std::optional<Monomial> minimal_spike(int k, std::uint64_t n)
{
    if (k < 1 || k > kMaxVars)
        throw CapacityError("variable count outside [1,6]");
    if (n == 0)
        return Monomial(k);
    if (mu(n) > static_cast<unsigned>(k))
        return std::nullopt;

    std::vector<int> ds;
    std::vector<std::vector<int>> found;
    // d values strictly decrease, except that the final two may coincide.
    std::function<void(std::uint64_t, int)> dfs = [&](std::uint64_t rest, int prev) {
        if (rest == 0) {
            found.push_back(ds);
            return;
        }
        if (static_cast<int>(ds.size()) == k)
            return;
        for (int d = std::min(prev, kMaxPlanes); d >= 1; --d) {
            std::uint64_t term = (std::uint64_t(1) << d) - 1;
            if (term > rest)
                continue;
            if (d == prev && rest != term)
                continue;
            ds.push_back(d);
            dfs(rest - term, d);
            ds.pop_back();
        }
    };
    dfs(n, kMaxPlanes + 1);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty())
        return std::nullopt;
    if (found.size() != 1)
        throw InvariantViolation("minimal spike of degree " + std::to_string(n) + " is not unique");
    Monomial z(k);
    for (std::size_t j = 0; j < found[0].size(); ++j)
        z.set(static_cast<int>(j), (1u << found[0][j]) - 1);
    return z;
}

/// Number of monomials of degree n in k variables, C(n+k-1, k-1); saturates.
inline std::uint64_t monomial_count(int k, std::uint64_t n)
{
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i < static_cast<std::uint64_t>(k); ++i) {
        // i divides c * (n + i); cancel the common factor first so only an
        // exact product remains.
        const std::uint64_t g = std::gcd(c, i);
        if (__builtin_mul_overflow(c / g, (n + i) / (i / g), &c))
            return std::numeric_limits<std::uint64_t>::max();
    }
    return c;
}

/// Calls fn(m) for every monomial of degree n in k variables (unordered).
template <class Fn>
void for_each_monomial(int k, unsigned n, Fn&& fn)
{
    if (n > kMaxExponent * static_cast<unsigned>(k))
        throw CapacityError("degree too large for 16-bit exponents");
    Monomial m(k);
    std::function<void(int, unsigned)> rec = [&](int j, unsigned rest) {
        if (j == k - 1) {
            if (rest > kMaxExponent)
                return;
            m.set(j, rest);
            fn(static_cast<const Monomial&>(m));
            return;
        }
        for (unsigned a = std::min(rest, kMaxExponent) + 1; a-- > 0;) {
            m.set(j, a);
            rec(j + 1, rest - a);
        }
    };
    rec(0, n);
}

/// The slice of monomials of degree n in k variables with a bijective index.
/// Index 0 is the largest monomial; indices follow the descending order.
class DegreeContext
{
  public:
    DegreeContext(int k, unsigned n, std::uint64_t max_count = std::numeric_limits<std::uint64_t>::max()) : k_(k), n_(n)
    {
        if (k < 1 || k > kMaxVars)
            throw CapacityError("variable count outside [1,6]");
        if (n > kMaxExponent)
            throw CapacityError("degree " + std::to_string(n) + " overflows the 16-bit exponent bound");
        auto count = monomial_count(k, n);
        if (count > max_count)
            throw CapacityError("degree slice (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ") has " +
                                std::to_string(count) + " monomials, above the cap of " + std::to_string(max_count));
        monos_.reserve(count);
        for_each_monomial(k, n, [&](const Monomial& m) { monos_.push_back(m); });
        sort_descending(monos_);
        index_.reserve(monos_.size() * 2);
        for (std::size_t i = 0; i < monos_.size(); ++i)
            index_.emplace(monos_[i], static_cast<std::uint32_t>(i));
    }

    int vars() const { return k_; }
    unsigned degree() const { return n_; }
    std::size_t size() const { return monos_.size(); }

    std::size_t rank(const Monomial& m) const
    {
        auto it = index_.find(m);
        if (it == index_.end())
            throw OutOfRange("monomial " + m.to_string() + " not in degree slice");
        return it->second;
    }

    std::optional<std::size_t> find(const Monomial& m) const
    {
        auto it = index_.find(m);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    const Monomial& unrank(std::size_t i) const
    {
        if (i >= monos_.size())
            throw OutOfRange("index outside degree slice");
        return monos_[i];
    }

    const std::vector<Monomial>& monomials() const { return monos_; }

  private:
    int k_;
    unsigned n_;
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

/// All monomials of degree n in k variables in strictly descending order.
inline std::vector<Monomial> enumerate_monomials(int k, unsigned n)
{
    return DegreeContext(k, n).monomials();
}

/// Monomials x in P_k with omega(x) = omega, in descending order.
inline std::vector<Monomial> monomials_of_weight(int k, const WeightVector& omega)
{
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (omega[i] > static_cast<unsigned>(k))
            return out;
    if (omega.size() > kMaxPlanes)
        throw CapacityError("weight too long for 16-bit exponents");
    std::array<unsigned, kMaxVars> acc{};
    std::function<void(std::size_t)> rec = [&](std::size_t plane) {
        if (plane == omega.size()) {
            Monomial m(k);
            for (int j = 0; j < k; ++j)
                m.set(j, acc[j]);
            out.push_back(m);
            return;
        }
        unsigned want = omega[plane];
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) != want)
                continue;
            for (int j = 0; j < k; ++j)
                if (mask >> j & 1u)
                    acc[j] |= 1u << plane;
            rec(plane + 1);
            for (int j = 0; j < k; ++j)
                if (mask >> j & 1u)
                    acc[j] &= ~(1u << plane);
        }
    };
    rec(0);
    sort_descending(out);
    return out;
}

// Text form: k space-separated exponents.
inline Monomial parse_monomial(std::string_view line)
{
    std::istringstream in{std::string(line)};
    std::vector<int> e;
    std::string tok;
    while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad exponent '" + tok + "'");
        unsigned long v = std::stoul(tok);
        if (v > kMaxExponent)
            throw CapacityError("exponent " + tok + " exceeds 16 bits");
        e.push_back(static_cast<int>(v));
    }
    if (e.empty())
        throw ParseError("empty monomial line");
    return Monomial(e);
}

}  // namespace hitproblem

template <>
struct std::hash<hitproblem::Monomial>
{
    std::size_t operator()(const hitproblem::Monomial& m) const { return m.hash(); }
};
