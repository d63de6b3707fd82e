#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace embcert::gf2 {

/// Dense bit vector over GF(2). Coordinates are packed little-endian into
/// 64-bit words: coordinate i lives in bit (i % 64) of word (i / 64).
/// Bits past size() are kept zero.
class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t len)
        : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    /// Index of the lowest set coordinate, npos when zero.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return npos;
    }

    /// GF(2) inner product.
    friend bool dot(const BitVector& a, const BitVector& b) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            acc ^= a.words_[w] & b.words_[w];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVector&) const = default;

    /// Strict total order: the lowest coordinate where the vectors differ
    /// decides, with 0 before 1. Used to pick canonical witnesses.
    static bool canonical_less(const BitVector& a, const BitVector& b) {
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff) {
                const int bit = std::countr_zero(diff);
                return !((a.words_[w] >> bit) & 1u);
            }
        }
        return false;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Indices of the set coordinates, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        out.reserve(popcount());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major bit matrix; every row shares the same length.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { row_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return row_[r]; }
    BitVector& row(std::size_t r) { return row_[r]; }

    /// Matrix-vector product M*v; v is indexed by columns.
    BitVector multiply(const BitVector& v) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

/// Rank over GF(2). Pivot choice is deterministic: lowest-index nonzero
/// column, first qualifying row.
std::size_t rank(BitMatrix m);

/// Reduced row echelon form with the same pivot rule.
BitMatrix reduced_row_echelon(BitMatrix m);

/// Canonical kernel basis derived from the RREF: one basis vector per free
/// column, free columns visited in increasing order. Size = cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Incrementally maintained echelon set for span membership and rank
/// queries. Rows are kept reduced against each other.
class EchelonBasis {
public:
    /// Inserts v if independent of the current span; returns false when v
    /// was already in the span (nothing inserted).
    bool insert(BitVector v);

    /// True iff v is a GF(2) combination of the inserted vectors.
    bool contains(BitVector v) const;

    std::size_t rank() const { return rows_.size(); }

private:
    BitVector reduce(BitVector v) const;

    std::vector<BitVector> rows_;     // rows_[i] has pivot pivots_[i]
    std::vector<std::size_t> pivots_; // strictly increasing
};

/// True iff v is a GF(2) combination of the basis vectors. All vectors must
/// share one length.
bool is_in_span(std::span<const BitVector> basis, const BitVector& v);

} // namespace embcert::gf2
