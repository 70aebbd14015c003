#pragma once

// Elimination of hit generators restricted to a chosen set of columns.
// Generators are discovered from the columns themselves (every m such that
// Sq^{2^u}(m) has a term among the columns), so the full degree slice never
// has to be materialized.

#include "hitproblem/gf2.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/steenrod.hpp"

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hitproblem {

/// Monomials of one degree, sorted descending, with reverse lookup.
class ColumnIndex
{
  public:
    ColumnIndex() = default;

    explicit ColumnIndex(std::vector<Monomial> cols) : cols_(std::move(cols))
    {
        sort_descending(cols_);
        index_.reserve(cols_.size() * 2);
        for (std::size_t i = 0; i < cols_.size(); ++i)
            index_.emplace(cols_[i], static_cast<std::uint32_t>(i));
    }

    std::size_t size() const { return cols_.size(); }
    const Monomial& operator[](std::size_t i) const { return cols_[i]; }
    const std::vector<Monomial>& monomials() const { return cols_; }

    std::int64_t find(const Monomial& m) const
    {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
    }

  private:
    std::vector<Monomial> cols_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

// What to do with one term of a generator image.
inline constexpr std::int64_t kDropTerm = -1;    // term is discarded (projected away)
inline constexpr std::int64_t kRejectRow = -2;   // the whole generator is unusable

struct EliminationStats
{
    std::uint64_t generators = 0;  // distinct (u, m) pairs examined
    std::uint64_t rejected = 0;    // generators skipped by the classifier
    std::uint64_t inserted = 0;    // rows that raised the rank
};

/// Builds the echelon basis spanned by the classified images of Sq^{2^u}(m),
/// u < max_u (and 2^u <= degree), over every m reaching at least one column.
/// classify(term) returns a column index, kDropTerm or kRejectRow.
/// stop(basis) is polled after each insertion and may end the run early.
/// Generators are discovered from the columns starting at discover_from and
/// wrapping around, so rows touching the tail can be found first.
template <class Classify, class Stop>
EchelonBasis restricted_elimination(const ColumnIndex& cols, unsigned max_u, Classify&& classify, Stop&& stop,
                                    EliminationStats* stats = nullptr, std::size_t discover_from = 0)
{
    EchelonBasis basis(cols.size());
    if (cols.size() == 0)
        return basis;
    const unsigned n = cols[0].degree();
    std::vector<std::unordered_set<Monomial, MonomialHash>> seen(max_u);
    std::vector<std::uint32_t> idx;
    EliminationStats local;

    for (std::size_t step = 0; step < cols.size(); ++step) {
        const std::size_t c = (discover_from + step) % cols.size();
        for (unsigned u = 0; u < max_u && (1u << u) <= n; ++u) {
            const unsigned square = 1u << u;
            bool done = false;
            for_each_sq_preimage(square, cols[c], [&](const Monomial& m) {
                if (done || !seen[u].insert(m).second)
                    return;
                ++local.generators;
                idx.clear();
                bool reject = false;
                for_each_sq_term(square, m, [&](const Monomial& t) {
                    if (reject)
                        return;
                    std::int64_t v = classify(t);
                    if (v == kRejectRow)
                        reject = true;
                    else if (v >= 0)
                        idx.push_back(static_cast<std::uint32_t>(v));
                });
                if (reject) {
                    ++local.rejected;
                    return;
                }
                if (!idx.empty() && basis.insert_indices(idx)) {
                    ++local.inserted;
                    if (stop(static_cast<const EchelonBasis&>(basis)))
                        done = true;
                }
            });
            if (done) {
                if (stats)
                    *stats = local;
                return basis;
            }
        }
    }
    if (stats)
        *stats = local;
    return basis;
}

template <class Classify>
EchelonBasis restricted_elimination(const ColumnIndex& cols, unsigned max_u, Classify&& classify,
                                    EliminationStats* stats = nullptr)
{
    return restricted_elimination(cols, max_u, std::forward<Classify>(classify), [](const EchelonBasis&) { return false; },
                                  stats);
}

}  // namespace hitproblem
