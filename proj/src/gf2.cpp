// Bit-packed Gaussian elimination over GF(2).

#include "embcert/gf2.hpp"

#include <algorithm>

#include "embcert/errors.hpp"

namespace embcert::gf2 {

namespace {

// First row at index >= from whose bit c is set.
std::size_t find_pivot_row(const BitMatrix& m, std::size_t from, std::size_t c) {
    for (std::size_t i = from; i < m.rows(); ++i)
        if (m.get(i, c)) return i;
    return BitVector::npos;
}

} // namespace

BitVector BitMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_)
        throw ArgumentError("multiply: vector length does not match column count");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (dot(row_[r], v)) out.set(r);
    return out;
}

std::size_t rank(BitMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = find_pivot_row(m, r, c);
        if (pivot == BitVector::npos) continue;
        if (pivot != r) std::swap(m.row(pivot), m.row(r));
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.row(i) ^= m.row(r);
        ++r;
    }
    return r;
}

BitMatrix reduced_row_echelon(BitMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = find_pivot_row(m, r, c);
        if (pivot == BitVector::npos) continue;
        if (pivot != r) std::swap(m.row(pivot), m.row(r));
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        ++r;
    }
    return m;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const std::size_t cols = m.cols();
    BitMatrix rref = reduced_row_echelon(m);

    // Pivot column of each nonzero row, in row order.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < rref.rows(); ++r) {
        const std::size_t p = rref.row(r).lowest_set();
        if (p == BitVector::npos) break; // zero rows are at the bottom
        pivot_col.push_back(p);
        is_pivot[p] = true;
    }

    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(cols);
        v.set(c);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            if (rref.get(r, c)) v.set(pivot_col[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVector EchelonBasis::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.test(pivots_[i])) v ^= rows_[i];
    return v;
}

bool EchelonBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    const std::size_t p = v.lowest_set();
    if (p == BitVector::npos) return false;
    // Keep earlier rows reduced against the new pivot.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].test(p)) rows_[i] ^= v;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) -
                     pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool EchelonBasis::contains(BitVector v) const {
    return !reduce(std::move(v)).any();
}

bool is_in_span(std::span<const BitVector> basis, const BitVector& v) {
    if (!basis.empty()) {
        for (const BitVector& b : basis)
            if (b.size() != v.size())
                throw ArgumentError("is_in_span: vector length mismatch");
    }
    EchelonBasis ech;
    for (const BitVector& b : basis) ech.insert(b);
    return ech.contains(v);
}

} // namespace embcert::gf2
