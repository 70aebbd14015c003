#pragma once

// Acceptance checks shared by `hitproblem verify` and the acceptance test
// binary. Each check reports PASS/FAIL with a one-line detail.

#include "hitproblem/golden.hpp"
#include "hitproblem/kameko.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/morphisms.hpp"
#include "hitproblem/polynomial.hpp"
#include "hitproblem/quotient.hpp"
#include "hitproblem/steenrod.hpp"
#include "hitproblem/weight_filtration.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hitproblem::verify {

struct CheckResult
{
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Options
{
    int d_max = 5;
    unsigned jobs = 1;
    FiltrationOptions filtration;
    std::function<void(const std::string&)> log;  // progress lines
};

namespace detail {
    inline std::uint64_t degree_for(int d) { return 4 * ((std::uint64_t(1) << d) - 1); }

    template <class Fn>
    CheckResult timed(std::string id, std::string title, Fn&& fn)
    {
        CheckResult r;
        r.id = std::move(id);
        r.title = std::move(title);
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(r);
        }
        catch (const std::exception& e) {
            r.pass = false;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

    inline std::string join(const std::vector<std::string>& parts, const char* sep = ", ")
    {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? sep : "") + parts[i];
        return s;
    }

    struct Split
    {
        std::size_t top = 0, bar_zero = 0, bar_plus = 0, other = 0;
    };

    inline Split split_by_weight(const std::vector<Monomial>& adm, int d)
    {
        Split s;
        auto top = WeightVector::top(5, d), bar = WeightVector::bar(5, d);
        for (const auto& m : adm) {
            auto w = WeightVector::of(m);
            if (w == top)
                ++s.top;
            else if (w == bar)
                ++(m.all_positive() ? s.bar_plus : s.bar_zero);
            else
                ++s.other;
        }
        return s;
    }

    // Brute force: the fewest terms 2^d - 1 (d >= 1) summing to n.
    inline unsigned mu_brute(unsigned n)
    {
        if (n == 0)
            return 0;
        std::vector<unsigned> parts;
        for (unsigned d = 1; (1u << d) - 1 <= n; ++d)
            parts.push_back((1u << d) - 1);
        std::function<bool(unsigned, unsigned, std::size_t)> reach = [&](unsigned rest, unsigned r, std::size_t from) {
            if (rest == 0)
                return true;
            if (r == 0)
                return false;
            for (std::size_t i = from; i < parts.size(); ++i)
                if (parts[i] <= rest && reach(rest - parts[i], r - 1, i))
                    return true;
            return false;
        };
        for (unsigned r = 1;; ++r)
            if (reach(n, r, 0))
                return r;
    }

    inline Monomial random_monomial(std::mt19937_64& rng, int k, unsigned max_exp)
    {
        Monomial m(k);
        for (int j = 0; j < k; ++j)
            m.set(j, static_cast<unsigned>(rng() % (max_exp + 1)));
        return m;
    }

    // A random homogeneous polynomial with up to `terms` terms.
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

    inline unsigned binom_mod2(int n, int r)
    {
        if (r < 0 || n < 0 || r > n)
            return 0;
        return (static_cast<unsigned>(r) & ~static_cast<unsigned>(n)) == 0 ? 1 : 0;
    }

    inline std::uint64_t binom(int n, int r)
    {
        if (r < 0 || r > n)
            return 0;
        std::uint64_t c = 1;
        for (int t = 1; t <= r; ++t)
            c = c * static_cast<std::uint64_t>(n - r + t) / static_cast<std::uint64_t>(t);
        return c;
    }

    // x_{perm[0]}^{e[0]} ... for a permutation of (1..5) given 1-based.
    inline Monomial place(const std::array<int, 5>& perm, const std::array<unsigned, 5>& e)
    {
        Monomial m(5);
        for (int t = 0; t < 5; ++t)
            m.set(perm[static_cast<std::size_t>(t)] - 1, e[static_cast<std::size_t>(t)]);
        return m;
    }

    // All distinct monomials x_i^{e0} x_j^{e1} x_l^{e2} x_m^{e3} x_n^{e4} over
    // permutations (i,j,l,m,n) of 1..5 satisfying pred.
    inline std::vector<Monomial> family(const std::array<unsigned, 5>& e,
                                        const std::function<bool(const std::array<int, 5>&)>& pred)
    {
        std::array<int, 5> p{1, 2, 3, 4, 5};
        std::set<Monomial, DescendingOrder> out;
        do {
            if (pred(p))
                out.insert(place(p, e));
        } while (std::next_permutation(p.begin(), p.end()));
        return {out.begin(), out.end()};
    }
}  // namespace detail

/// Monomial families stated to be strictly inadmissible, keyed by a short label.
struct Fixture
{
    std::string label;
    std::vector<Monomial> monomials;
};

inline std::vector<Fixture> strict_inadmissible_fixtures()
{
    using detail::family;
    std::vector<Fixture> out;
    out.push_back({"x_i^2 x_j x_l x_m x_n^3, i<j<l<m",
                   family({2, 1, 1, 1, 3}, [](const auto& p) { return p[0] < p[1] && p[1] < p[2] && p[2] < p[3]; })});
    out.push_back({"x_i^2 x_j x_l^3 x_m^3 x_n^3, i<j", family({2, 1, 3, 3, 3}, [](const auto& p) { return p[0] < p[1]; })});
    out.push_back({"x_i^3 x_j^4 x_l^7 x_m^7 x_n^7, i<j", family({3, 4, 7, 7, 7}, [](const auto& p) { return p[0] < p[1]; })});
    out.push_back({"degree-28 list",
                   {Monomial{7, 9, 6, 3, 3}, Monomial{7, 8, 3, 3, 7}, Monomial{7, 8, 3, 7, 3}, Monomial{7, 8, 7, 3, 3}}});
    out.push_back({"x_i^7 x_j^7 x_l^8 x_m^7 x_n^15, i<j<l<m",
                   family({7, 7, 8, 7, 15}, [](const auto& p) { return p[0] < p[1] && p[1] < p[2] && p[2] < p[3]; })});
    out.push_back({"degree-60 list",
                   {Monomial{7, 7, 15, 16, 15},  Monomial{7, 15, 7, 16, 15},  Monomial{7, 15, 16, 7, 15},
                    Monomial{7, 15, 16, 15, 7},  Monomial{7, 15, 17, 6, 15},  Monomial{7, 15, 17, 14, 7},
                    Monomial{7, 15, 17, 15, 6},  Monomial{15, 7, 7, 16, 15},  Monomial{15, 7, 16, 7, 15},
                    Monomial{15, 7, 16, 15, 7},  Monomial{15, 7, 17, 6, 15},  Monomial{15, 7, 17, 14, 7},
                    Monomial{15, 7, 17, 15, 6},  Monomial{15, 15, 16, 7, 7},  Monomial{15, 19, 5, 6, 15},
                    Monomial{15, 19, 5, 14, 7},  Monomial{15, 19, 5, 15, 6},  Monomial{15, 19, 15, 5, 6}}});
    return out;
}

class Runner
{
  public:
    explicit Runner(Options opts = {})
        : opts_(std::move(opts)), cache_(BasisOptions{1'000'000, std::max(1u, opts_.jobs), {}})
    {
        opts_.filtration.jobs = std::max(1u, opts_.jobs);
    }

    // Criteria 1-3: monolithic dimension in degree 4(2^d - 1) and its split.
    CheckResult main_theorem(int d)
    {
        return detail::timed("C" + std::to_string(d), "dim (QP_5)_" + std::to_string(detail::degree_for(d)) + " monolithic",
                             [&](CheckResult& r) {
                                 const auto g = GoldenTable::instance().golden(d);
                                 auto basis = cache_.get(5, static_cast<unsigned>(detail::degree_for(d)));
                                 auto s = detail::split_by_weight(basis->admissibles(), d);
                                 std::ostringstream os;
                                 os << "dim " << basis->dimension() << " (expected " << g.total << ")";
                                 r.pass = basis->dimension() == g.total;
                                 if (d >= 2) {
                                     os << ", split " << s.top << "+" << s.bar_zero << "+" << s.bar_plus << " (expected "
                                        << g.qp_omega << "+" << g.qp0_bar << "+" << g.b << "), other weights " << s.other;
                                     r.pass = r.pass && s.top == g.qp_omega && s.bar_zero == g.qp0_bar &&
                                              s.bar_plus == g.b && s.other == 0;
                                 }
                                 r.detail = os.str();
                             });
    }

    // Criteria 4-5: dimension via the weight filtration.
    CheckResult filtration_theorem(int d)
    {
        const std::string id = d == 4 ? "C4" : "C5";
        return detail::timed(id, "dim (QP_5)_" + std::to_string(detail::degree_for(d)) + " by weight blocks",
                             [&](CheckResult& r) {
                                 const auto g = GoldenTable::instance().golden(d);
                                 const auto n = detail::degree_for(d);
                                 auto res = filtration(5, n, opts_.filtration);
                                 auto top = WeightVector::top(5, d), bar = WeightVector::bar(5, d);
                                 std::size_t top_dim = 0, bar_dim = 0, eliminated = 0, singer = 0;
                                 for (const auto& b : res.blocks) {
                                     if (b.omega == top)
                                         top_dim = b.dim;
                                     if (b.omega == bar)
                                         bar_dim = b.dim;
                                     (b.method == BlockMethod::singer ? singer : eliminated)++;
                                 }
                                 BlockOptions bo = opts_.filtration.block;
                                 bo.method = BlockMethod::upset;
                                 bo.singer = SingerPolicy::never;
                                 auto adm = compute_block(5, bar, bo).admissibles();
                                 std::size_t plus = static_cast<std::size_t>(
                                     std::count_if(adm.begin(), adm.end(), [](const Monomial& m) { return m.all_positive(); }));
                                 std::ostringstream os;
                                 os << "dim " << res.total() << " (expected " << g.total << "), blocks " << top_dim << "+"
                                    << bar_dim << ", bar split " << adm.size() - plus << "+" << plus << " (expected "
                                    << g.qp_omega << "+" << g.qp0_bar + g.b << ", " << g.qp0_bar << "+" << g.b << "); "
                                    << eliminated << " blocks eliminated, " << singer << " zero by Singer's criterion";
                                 r.pass = res.total() == g.total && top_dim == g.qp_omega && bar_dim == g.qp0_bar + g.b &&
                                          adm.size() - plus == g.qp0_bar && plus == g.b;
                                 r.detail = os.str();
                             });
    }

    // Criterion 6: B_4(4(2^d - 1)) is the v-family, d = 2..min(d_max, 4).
    CheckResult b4_golden()
    {
        return detail::timed("C6", "B_4 equals the v-family", [&](CheckResult& r) {
            std::vector<std::string> parts;
            r.pass = true;
            for (int d = 2; d <= std::min(opts_.d_max, 4); ++d) {
                auto basis = compute_basis(4, static_cast<unsigned>(detail::degree_for(d)));
                auto v = GoldenTable::instance().instantiate_v(d);
                std::set<Monomial, DescendingOrder> a(basis.admissibles().begin(), basis.admissibles().end());
                std::set<Monomial, DescendingOrder> b(v.begin(), v.end());
                bool ok = a == b && a.size() == 21;
                r.pass = r.pass && ok;
                parts.push_back("d=" + std::to_string(d) + ": " + std::to_string(a.size()) + (ok ? " equal" : " DIFFER"));
            }
            r.detail = detail::join(parts);
        });
    }

    // Criterion 7: dim QP_k(omega_(k,d)) = sum_{t<=min(k,d)} C(k,t), k,d <= 5.
    CheckResult top_weight_closed_form()
    {
        return detail::timed("C7", "top-weight closed form", [&](CheckResult& r) {
            std::vector<std::string> bad;
            int cases = 0;
            BlockOptions bo;
            bo.method = BlockMethod::upset;
            bo.singer = SingerPolicy::never;
            for (int k = 1; k <= 5; ++k)
                for (int d = 1; d <= 5; ++d) {
                    ++cases;
                    auto b = compute_block(k, WeightVector::top(k, d), bo);
                    if (b.dimension() != top_weight_dimension(k, d))
                        bad.push_back("k=" + std::to_string(k) + ",d=" + std::to_string(d) + ": " +
                                      std::to_string(b.dimension()) + " vs " + std::to_string(top_weight_dimension(k, d)));
                }
            r.pass = bad.empty();
            r.detail = std::to_string(cases - static_cast<int>(bad.size())) + "/" + std::to_string(cases) + " cases" +
                       (bad.empty() ? "" : "; " + detail::join(bad));
        });
    }

    // Criterion 8: block sums equal monolithic dims, per weight as well.
    CheckResult filtration_vs_monolithic(int k_max = 5, unsigned n_small = 30, unsigned n_k5 = 28)
    {
        return detail::timed("C8", "weight blocks agree with monolithic", [&](CheckResult& r) {
            std::vector<std::string> bad;
            int cases = 0;
            FiltrationOptions fo = opts_.filtration;
            fo.block.method = BlockMethod::upset;
            fo.block.singer = SingerPolicy::never;
            for (int k = 1; k <= k_max; ++k)
                for (unsigned n = 0; n <= (k == 5 ? n_k5 : n_small); ++n) {
                    ++cases;
                    auto basis = compute_basis(k, n);
                    std::map<WeightVector, std::size_t> per;
                    for (const auto& m : basis.admissibles())
                        ++per[WeightVector::of(m)];
                    auto res = filtration(k, n, fo);
                    bool ok = res.total() == basis.dimension();
                    for (const auto& b : res.blocks)
                        ok = ok && b.dim == (per.count(b.omega) ? per[b.omega] : 0);
                    if (!ok)
                        bad.push_back("k=" + std::to_string(k) + ",n=" + std::to_string(n) + ": " +
                                      std::to_string(res.total()) + " vs " + std::to_string(basis.dimension()));
                }
            r.pass = bad.empty();
            r.detail = std::to_string(cases - static_cast<int>(bad.size())) + "/" + std::to_string(cases) +
                       " slices agree per weight" + (bad.empty() ? "" : "; " + detail::join(bad));
        });
    }

    // Criterion 9: only omega_(5,d) and bar omega_(5,d) carry nonzero blocks.
    CheckResult dichotomy()
    {
        return detail::timed("C9", "weight dichotomy", [&](CheckResult& r) {
            std::vector<std::string> parts;
            r.pass = true;
            for (int d = 1; d <= std::min(opts_.d_max, 4); ++d) {
                auto rep = weight_dichotomy_report(d, opts_.filtration);
                std::size_t singer = 0;
                for (const auto& b : rep.blocks)
                    singer += b.method == BlockMethod::singer;
                r.pass = r.pass && rep.holds;
                parts.push_back("d=" + std::to_string(d) + (rep.holds ? " holds" : " FAILS") + " (" +
                                std::to_string(rep.blocks.size() - singer) + " eliminated, " + std::to_string(singer) +
                                " by Singer)");
            }
            r.detail = detail::join(parts);
        });
    }

    // Criterion 10.
    CheckResult strict_inadmissibility()
    {
        return detail::timed("C10", "strictly inadmissible fixtures", [&](CheckResult& r) {
            std::vector<std::string> bad;
            std::size_t total = 0;
            for (const auto& fx : strict_inadmissible_fixtures()) {
                for (const auto& x : fx.monomials) {
                    ++total;
                    if (!is_strictly_inadmissible(x))
                        bad.push_back(x.to_string() + " not strictly inadmissible");
                    if (admissible(x))
                        bad.push_back(x.to_string() + " is admissible");
                }
            }
            r.pass = bad.empty() && total > 0;
            r.detail = std::to_string(total) + " monomials checked" + (bad.empty() ? "" : "; " + detail::join(bad));
        });
    }

    // Criterion 11.
    CheckResult properties()
    {
        return detail::timed("C11", "property suites", [&](CheckResult& r) {
            std::vector<std::string> parts, failed;
            for (auto& [name, fn] : property_list()) {
                std::string why;
                bool ok = false;
                try {
                    ok = fn(why);
                }
                catch (const std::exception& e) {
                    why = e.what();
                }
                log(std::string(ok ? "  ok   " : "  FAIL ") + name + (why.empty() ? "" : ": " + why));
                if (!ok)
                    failed.push_back(name + (why.empty() ? "" : " (" + why + ")"));
                parts.push_back(name);
            }
            r.pass = failed.empty() && !parts.empty();
            r.detail = std::to_string(parts.size() - failed.size()) + "/" + std::to_string(parts.size()) + " properties" +
                       (failed.empty() ? "" : "; failed: " + detail::join(failed));
        });
    }

    using Property = std::pair<std::string, std::function<bool(std::string&)>>;

    std::vector<Property> property_list()
    {
        std::vector<Property> ps;
        ps.push_back({"Cartan formula", [](std::string& why) { return cartan(why); }});
        ps.push_back({"instability", [](std::string& why) { return instability(why); }});
        ps.push_back({"Adem relations (a+b<=12)", [](std::string& why) { return adem(why); }});
        ps.push_back({"mu DP vs brute force (n<=200)", [](std::string& why) {
                          for (unsigned n = 0; n <= 200; ++n)
                              if (mu(n) != detail::mu_brute(n)) {
                                  why = "n=" + std::to_string(n);
                                  return false;
                              }
                          return true;
                      }});
        ps.push_back({"Singer soundness (k<=5, n<=28)", [this](std::string& why) { return singer_soundness(why); }});
        ps.push_back({"Wood agreement (k<=4, n<=30)", [this](std::string& why) { return wood_agreement(why); }});
        ps.push_back({"p o f retraction", [](std::string& why) { return retraction(why); }});
        ps.push_back({"A-linearity of p", [](std::string& why) { return p_linearity(why); }});
        ps.push_back({"p preserves the weight bound", [](std::string& why) { return p_weight_bound(why); }});
        ps.push_back({"Kameko round trip and isomorphism", [this](std::string& why) { return kameko_props(why); }});
        ps.push_back({"QP^0 + QP^+ split", [this](std::string& why) { return split_exactness(why); }});
        ps.push_back({"Phi^0(B_{k-1}) = B_k^0 (k<=5, n<=28)", [this](std::string& why) { return phi_zero(why); }});
        return ps;
    }

    std::vector<CheckResult> run_suite(const std::string& suite)
    {
        std::vector<CheckResult> out;
        auto add = [&](CheckResult r) {
            log(std::string(r.pass ? "PASS " : "FAIL ") + r.id + " " + r.title);
            out.push_back(std::move(r));
        };
        const bool all = suite == "all";
        if (suite != "all" && suite != "main" && suite != "filtration" && suite != "properties")
            throw OutOfRange("unknown suite '" + suite + "' (main, filtration, properties, all)");
        if (all || suite == "main") {
            for (int d = 1; d <= std::min(opts_.d_max, 3); ++d)
                add(main_theorem(d));
            if (opts_.d_max >= 2)
                add(b4_golden());
        }
        if (all || suite == "filtration") {
            if (opts_.d_max >= 4)
                add(filtration_theorem(4));
            if (opts_.d_max >= 5)
                add(filtration_theorem(5));
            add(top_weight_closed_form());
            add(filtration_vs_monolithic());
            add(dichotomy());
        }
        if (all || suite == "properties") {
            add(strict_inadmissibility());
            add(properties());
        }
        return out;
    }

    /// Admissibility of x read from the monolithic basis when the slice is
    /// small enough, otherwise from the exact block of its weight.
    bool admissible(const Monomial& x)
    {
        if (monomial_count(x.vars(), x.degree()) <= 40'000)
            return cache_.get(x.vars(), x.degree())->is_admissible(x);
        BlockOptions bo;
        bo.method = BlockMethod::upset;
        bo.singer = SingerPolicy::never;
        auto block = compute_block(x.vars(), WeightVector::of(x), bo);
        auto adm = block.admissibles();
        return std::find(adm.begin(), adm.end(), x) != adm.end();
    }

    BasisCache& cache() { return cache_; }

  private:
    void log(const std::string& s) const
    {
        if (opts_.log)
            opts_.log(s);
    }

    static bool cartan(std::string& why)
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            int k = 1 + static_cast<int>(rng() % 4);
            auto f = detail::random_polynomial(rng, k, 1 + static_cast<unsigned>(rng() % 6), 3);
            auto g = detail::random_polynomial(rng, k, 1 + static_cast<unsigned>(rng() % 6), 3);
            unsigned i = static_cast<unsigned>(rng() % 10);
            Polynomial rhs(k);
            for (unsigned a = 0; a <= i; ++a)
                rhs += multiply(sq(a, f), sq(i - a, g));
            if (!(sq(i, multiply(f, g)) == rhs)) {
                why = "Sq^" + std::to_string(i) + "(" + f.to_string() + " * " + g.to_string() + ")";
                return false;
            }
        }
        return true;
    }

    static bool instability(std::string& why)
    {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 300; ++trial) {
            int k = 1 + static_cast<int>(rng() % 5);
            auto x = detail::random_monomial(rng, k, 9);
            const unsigned n = x.degree();
            Polynomial square = Polynomial::multiply(Polynomial(x), Polynomial(x));
            if (!(sq(n, x) == square) || !sq(n + 1 + static_cast<unsigned>(rng() % 4), x).is_zero() ||
                !(sq(0, x) == Polynomial(x))) {
                why = x.to_string();
                return false;
            }
        }
        return true;
    }

    // Sq^a Sq^b = sum_j C(b-1-j, a-2j) Sq^{a+b-j} Sq^j for 0 < a < 2b.
    static bool adem(std::string& why)
    {
        std::mt19937_64 rng(13);
        for (int a = 1; a <= 11; ++a)
            for (int b = 1; a + b <= 12; ++b) {
                if (a >= 2 * b)
                    continue;
                for (int trial = 0; trial < 6; ++trial) {
                    int k = 2 + static_cast<int>(rng() % 3);
                    auto f = detail::random_polynomial(rng, k, 2 + static_cast<unsigned>(rng() % 8), 3);
                    Polynomial lhs = sq(static_cast<unsigned>(a), sq(static_cast<unsigned>(b), f));
                    Polynomial rhs(k);
                    for (int j = 0; 2 * j <= a; ++j)
                        if (detail::binom_mod2(b - 1 - j, a - 2 * j))
                            rhs += sq(static_cast<unsigned>(a + b - j), sq(static_cast<unsigned>(j), f));
                    if (!(lhs == rhs)) {
                        why = "a=" + std::to_string(a) + ", b=" + std::to_string(b) + " on " + f.to_string();
                        return false;
                    }
                }
            }
        return true;
    }

    bool singer_soundness(std::string& why)
    {
        for (int k = 1; k <= 5; ++k)
            for (unsigned n = 1; n <= 28; ++n) {
                auto z = minimal_spike(k, n);
                if (!z)
                    continue;
                auto basis = cache_.get(k, n);
                auto wz = WeightVector::of(*z);
                for (std::size_t c = 0; c < basis->context().size(); ++c) {
                    const auto& y = basis->context().unrank(c);
                    if (WeightVector::of(y) < wz && !is_hit(*basis, Polynomial(y))) {
                        why = y.to_string() + " below the minimal spike but not hit";
                        return false;
                    }
                }
            }
        return true;
    }

    bool wood_agreement(std::string& why)
    {
        for (int k = 1; k <= 4; ++k)
            for (unsigned n = 0; n <= 30; ++n)
                if (wood_filter(k, n) && cache_.get(k, n)->dimension() != 0) {
                    why = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
                    return false;
                }
        return true;
    }

    static bool retraction(std::string& why)
    {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 200; ++trial) {
            int k = 2 + static_cast<int>(rng() % 4);
            int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
            auto y = detail::random_polynomial(rng, k - 1, static_cast<unsigned>(rng() % 12), 4);
            if (!(p_map(IndexPair{i, {}}, f_i(i, y)) == y)) {
                why = "i=" + std::to_string(i) + " on " + y.to_string();
                return false;
            }
        }
        return true;
    }

    static IndexPair random_pair(std::mt19937_64& rng, int k)
    {
        auto pairs = enumerate_pairs(k);
        return pairs[rng() % pairs.size()];
    }

    static bool p_linearity(std::string& why)
    {
        std::mt19937_64 rng(15);
        for (int trial = 0; trial < 200; ++trial) {
            int k = 2 + static_cast<int>(rng() % 4);
            auto pair = random_pair(rng, k);
            auto f = detail::random_polynomial(rng, k, 1 + static_cast<unsigned>(rng() % 7), 3);
            unsigned j = static_cast<unsigned>(rng() % 9);
            if (!(p_map(pair, sq(j, f)) == sq(j, p_map(pair, f)))) {
                why = pair.to_string() + ", Sq^" + std::to_string(j) + " on " + f.to_string();
                return false;
            }
        }
        return true;
    }

    static bool p_weight_bound(std::string& why)
    {
        std::mt19937_64 rng(16);
        for (int trial = 0; trial < 300; ++trial) {
            int k = 2 + static_cast<int>(rng() % 4);
            auto pair = random_pair(rng, k);
            auto x = detail::random_monomial(rng, k, 15);
            auto wx = WeightVector::of(x);
            for (const auto& y : p_map(pair, Polynomial(x)))
                if (WeightVector::of(y) > wx) {
                    why = pair.to_string() + " maps " + x.to_string() + " to " + y.to_string();
                    return false;
                }
        }
        return true;
    }

    bool kameko_props(std::string& why)
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            auto y = detail::random_monomial(rng, 1 + static_cast<int>(rng() % 5), 40);
            if (kameko_down(kameko_up(y)) != y) {
                why = "round trip on " + y.to_string();
                return false;
            }
        }
        int qualifying = 0;
        for (int k = 1; k <= 4; ++k)
            for (unsigned m = 0; m <= 12; ++m) {
                if (mu(2 * m + static_cast<unsigned>(k)) != static_cast<unsigned>(k))
                    continue;
                ++qualifying;
                auto rep = kameko_iso_check(k, m, &cache_);
                if (!rep.isomorphism) {
                    why = "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ": dims " +
                          std::to_string(rep.source_dim) + "/" + std::to_string(rep.target_dim) + ", rank " +
                          std::to_string(rep.induced_rank);
                    return false;
                }
            }
        why = std::to_string(qualifying) + " qualifying (k,m)";
        return qualifying > 0;
    }

    // P_k^0 is the sum of the coordinate subalgebras, so
    // |B_k^0(n)| = sum_{0<j<k} C(k,j) |B_j^+(n)|.
    bool split_exactness(std::string& why)
    {
        for (int k = 2; k <= 5; ++k)
            for (unsigned n = 1; n <= (k == 5 ? 20u : 24u); ++n) {
                auto [zero, plus] = split_basis(*cache_.get(k, n));
                std::uint64_t expect = 0;
                for (int j = 1; j < k; ++j)
                    expect += detail::binom(k, j) * split_basis(*cache_.get(j, n)).second.size();
                if (zero.size() != expect || zero.size() + plus.size() != cache_.get(k, n)->dimension()) {
                    why = "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": |B^0|=" +
                          std::to_string(zero.size()) + " vs " + std::to_string(expect);
                    return false;
                }
            }
        return true;
    }

    bool phi_zero(std::string& why)
    {
        for (int k = 2; k <= 5; ++k)
            for (unsigned n = 1; n <= 28; ++n) {
                auto sets = phi_sets(cache_.get(k - 1, n)->admissibles(), k);
                auto zero = split_basis(*cache_.get(k, n)).first;
                if (sets.zero != zero) {
                    why = "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": |Phi^0|=" +
                          std::to_string(sets.zero.size()) + " vs |B^0|=" + std::to_string(zero.size());
                    return false;
                }
            }
        return true;
    }

    Options opts_;
    BasisCache cache_;
};

}  // namespace hitproblem::verify
