#pragma once

// Bit-packed rows over GF(2) and a streaming echelon basis. Column 0 is the
// most significant column: a row's pivot is its lowest set index.

#include "hitproblem/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace hitproblem {

class BitRow
{
  public:
    BitRow() = default;
    explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitRow from_indices(std::size_t n, std::span<const std::uint32_t> ones)
    {
        BitRow r(n);
        for (auto c : ones)
            r.flip(c);
        return r;
    }

    std::size_t size() const { return n_; }
    std::size_t word_count() const { return w_.size(); }
    std::span<std::uint64_t> words() { return w_; }
    std::span<const std::uint64_t> words() const { return w_; }

    bool test(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void flip(std::size_t i)
    {
        check(i);
        w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    bool none() const
    {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }

    std::optional<std::size_t> first() const
    {
        for (std::size_t w = 0; w < w_.size(); ++w)
            if (w_[w])
                return w * 64 + static_cast<std::size_t>(std::countr_zero(w_[w]));
        return std::nullopt;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w_)
            c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    std::vector<std::size_t> ones() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < w_.size(); ++w)
            for (std::uint64_t x = w_[w]; x; x &= x - 1)
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        return out;
    }

    BitRow& operator^=(const BitRow& o)
    {
        if (o.n_ != n_)
            throw ArityMismatch("xor of rows with different lengths");
        for (std::size_t w = 0; w < w_.size(); ++w)
            w_[w] ^= o.w_[w];
        return *this;
    }
    friend BitRow operator^(BitRow a, const BitRow& b) { return a ^= b; }
    friend bool operator==(const BitRow&, const BitRow&) = default;

  private:
    void check(std::size_t i) const
    {
        if (i >= n_)
            throw OutOfRange("bit index " + std::to_string(i) + " outside row of length " + std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Incremental echelon basis of a subspace of GF(2)^columns.
///
/// Rows are stored from their pivot word onward. Insertion keeps the basis in
/// echelon form (distinct leading columns); reduce_fully() additionally clears
/// every pivot column from all other rows. normal_form() is exact either way.
/// Single writer; concurrent const access is safe between insertions.
class EchelonBasis
{
  public:
    explicit EchelonBasis(std::size_t columns = 0) : cols_(columns), words_((columns + 63) / 64), pivot_row_(columns, -1) {}

    std::size_t columns() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces row against the basis; stores the remainder if nonzero.
    bool insert(BitRow row)
    {
        require_length(row);
        auto w = row.words();
        for (std::size_t i = 0; i < words_; ++i) {
            while (std::uint64_t x = w[i]) {
                std::size_t c = i * 64 + static_cast<std::size_t>(std::countr_zero(x));
                std::int32_t p = pivot_row_[c];
                if (p < 0) {
                    store(c, w.subspan(i));
                    return true;
                }
                xor_into(w, rows_[static_cast<std::size_t>(p)]);
            }
        }
        return false;
    }

    bool insert_indices(std::span<const std::uint32_t> ones) { return insert(BitRow::from_indices(cols_, ones)); }

    /// The representative of row modulo the span with no set pivot column.
    BitRow normal_form(BitRow row) const
    {
        require_length(row);
        auto w = row.words();
        for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t kept = 0;
            while (std::uint64_t x = w[i] & ~kept) {
                std::uint64_t low = x & (~x + 1);
                std::size_t c = i * 64 + static_cast<std::size_t>(std::countr_zero(x));
                std::int32_t p = pivot_row_[c];
                if (p < 0) {
                    kept |= low;
                    continue;
                }
                xor_into(w, rows_[static_cast<std::size_t>(p)]);
            }
        }
        return row;
    }

    bool contains(const BitRow& row) const { return normal_form(row).none(); }

    bool is_pivot(std::size_t c) const { return c < cols_ && pivot_row_[c] >= 0; }

    /// Pivot of the most recently stored row.
    std::optional<std::size_t> last_pivot() const
    {
        if (rows_.empty())
            return std::nullopt;
        return rows_.back().pivot;
    }

    std::vector<std::size_t> pivot_columns() const
    {
        std::vector<std::size_t> out;
        out.reserve(rows_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] >= 0)
                out.push_back(c);
        return out;
    }

    /// The stored row whose pivot is c, expanded to full length.
    BitRow row_with_pivot(std::size_t c) const
    {
        if (!is_pivot(c))
            throw OutOfRange("column " + std::to_string(c) + " is not a pivot");
        return expand(rows_[static_cast<std::size_t>(pivot_row_[c])]);
    }

    /// Back-substitution: afterwards no row has a set bit in another row's pivot column.
    void reduce_fully()
    {
        auto pivots = pivot_columns();
        std::vector<std::uint64_t> scratch(words_);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            Row& r = rows_[static_cast<std::size_t>(pivot_row_[*it])];
            std::fill(scratch.begin(), scratch.end(), 0);
            std::copy(r.w.begin(), r.w.end(), scratch.begin() + r.first_word);
            std::span<std::uint64_t> w(scratch);
            std::size_t pivot = *it;
            for (std::size_t i = r.first_word; i < words_; ++i) {
                std::uint64_t kept = 0;
                while (std::uint64_t x = w[i] & ~kept) {
                    std::uint64_t low = x & (~x + 1);
                    std::size_t c = i * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    std::int32_t p = pivot_row_[c];
                    if (c == pivot || p < 0) {
                        kept |= low;
                        continue;
                    }
                    xor_into(w, rows_[static_cast<std::size_t>(p)]);
                }
            }
            std::copy(scratch.begin() + r.first_word, scratch.end(), r.w.begin());
        }
    }

    bool is_fully_reduced() const
    {
        for (const auto& r : rows_) {
            BitRow full = expand(r);
            for (auto c : full.ones())
                if (c != r.pivot && pivot_row_[c] >= 0)
                    return false;
        }
        return true;
    }

    /// Checkpoint: column_count and rank as little-endian u64, then each row
    /// as ceil(columns/64) little-endian u64 words, rows in pivot order.
    void save(std::ostream& out) const
    {
        put_u64(out, cols_);
        put_u64(out, rows_.size());
        for (auto c : pivot_columns()) {
            BitRow full = expand(rows_[static_cast<std::size_t>(pivot_row_[c])]);
            for (auto x : full.words())
                put_u64(out, x);
        }
        if (!out)
            throw Error("failed to write echelon checkpoint");
    }

    static EchelonBasis load(std::istream& in)
    {
        std::uint64_t cols = get_u64(in), rank = get_u64(in);
        if (rank > cols)
            throw ParseError("checkpoint rank exceeds column count");
        EchelonBasis b(static_cast<std::size_t>(cols));
        for (std::uint64_t r = 0; r < rank; ++r) {
            BitRow row(b.cols_);
            for (auto& x : row.words())
                x = get_u64(in);
            if (!b.insert(std::move(row)))
                throw ParseError("checkpoint rows are linearly dependent");
        }
        return b;
    }

  private:
    struct Row
    {
        std::size_t pivot;
        std::size_t first_word;
        std::vector<std::uint64_t> w;  // words first_word .. end
    };

    void require_length(const BitRow& row) const
    {
        if (row.size() != cols_)
            throw ArityMismatch("row length " + std::to_string(row.size()) + " does not match " + std::to_string(cols_) + " columns");
    }

    void store(std::size_t pivot, std::span<const std::uint64_t> tail)
    {
        pivot_row_[pivot] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(Row{pivot, pivot / 64, std::vector<std::uint64_t>(tail.begin(), tail.end())});
    }

    static void xor_into(std::span<std::uint64_t> w, const Row& r)
    {
        std::uint64_t* dst = w.data() + r.first_word;
        const std::uint64_t* src = r.w.data();
        const std::size_t n = r.w.size();
        for (std::size_t i = 0; i < n; ++i)
            dst[i] ^= src[i];
    }

    BitRow expand(const Row& r) const
    {
        BitRow full(cols_);
        std::copy(r.w.begin(), r.w.end(), full.words().begin() + static_cast<std::ptrdiff_t>(r.first_word));
        return full;
    }

    static void put_u64(std::ostream& out, std::uint64_t v)
    {
        char b[8];
        for (int i = 0; i < 8; ++i)
            b[i] = static_cast<char>(v >> (8 * i) & 0xFF);
        out.write(b, 8);
    }

    static std::uint64_t get_u64(std::istream& in)
    {
        unsigned char b[8];
        if (!in.read(reinterpret_cast<char*>(b), 8))
            throw ParseError("truncated echelon checkpoint");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= std::uint64_t(b[i]) << (8 * i);
        return v;
    }

    std::size_t cols_;
    std::size_t words_;
    std::vector<std::int32_t> pivot_row_;
    std::vector<Row> rows_;
};

}  // namespace hitproblem
