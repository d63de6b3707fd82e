// Smith normal form over the integers with overflow-checked arithmetic.

#include <cstdlib>
#include <vector>

#include "embcert/errors.hpp"
#include "embcert/homology.hpp"

namespace embcert {

namespace {

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in Smith normal form");
    return out;
}

long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in Smith normal form");
    return out;
}

struct IntMatrix {
    std::vector<std::vector<long long>> a;
    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

    void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
    }
    // row_i -= q * row_s
    void row_axpy(std::size_t i, std::size_t s, long long q) {
        for (std::size_t c = 0; c < cols(); ++c)
            a[i][c] = checked_sub(a[i][c], checked_mul(q, a[s][c]));
    }
    // col_j -= q * col_s
    void col_axpy(std::size_t j, std::size_t s, long long q) {
        for (std::size_t r = 0; r < rows(); ++r)
            a[r][j] = checked_sub(a[r][j], checked_mul(q, a[r][s]));
    }
    void add_row_to(std::size_t dst, std::size_t src) {
        for (std::size_t c = 0; c < cols(); ++c) {
            long long out;
            if (__builtin_add_overflow(a[dst][c], a[src][c], &out))
                throw OverflowError("integer overflow in Smith normal form");
            a[dst][c] = out;
        }
    }
};

// Minimal nonzero absolute value in the trailing submatrix a[s:, s:].
bool find_min_pivot(const IntMatrix& m, std::size_t s, std::size_t& pr,
                    std::size_t& pc) {
    bool found = false;
    long long best = 0;
    for (std::size_t i = s; i < m.rows(); ++i) {
        for (std::size_t j = s; j < m.cols(); ++j) {
            const long long v = m.a[i][j];
            if (v == 0) continue;
            const long long av = v < 0 ? -v : v;
            if (!found || av < best) {
                found = true;
                best = av;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

} // namespace

std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> input) {
    IntMatrix m{std::move(input)};
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<long long> diag;

    for (std::size_t s = 0; s < n; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_min_pivot(m, s, pr, pc)) break;
        if (pr != s) m.swap_rows(pr, s);
        if (pc != s) m.swap_cols(pc, s);

        // Euclidean reduction of row s and column s against the pivot.
        // Each pass either clears them or strictly shrinks |pivot|.
        while (true) {
            bool clean = true;
            for (std::size_t i = s + 1; i < m.rows(); ++i) {
                if (m.a[i][s] == 0) continue;
                const long long q = m.a[i][s] / m.a[s][s];
                m.row_axpy(i, s, q);
                if (m.a[i][s] != 0) {
                    m.swap_rows(i, s); // remainder becomes the smaller pivot
                    clean = false;
                }
            }
            for (std::size_t j = s + 1; j < m.cols(); ++j) {
                if (m.a[s][j] == 0) continue;
                const long long q = m.a[s][j] / m.a[s][s];
                m.col_axpy(j, s, q);
                if (m.a[s][j] != 0) {
                    m.swap_cols(j, s);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Divisibility of the trailing block by the pivot; folding an
            // offending row into row s shrinks the pivot to a gcd.
            bool divides = true;
            for (std::size_t i = s + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = s + 1; j < m.cols() && divides; ++j)
                    if (m.a[i][j] % m.a[s][s] != 0) {
                        m.add_row_to(s, i);
                        divides = false;
                    }
            if (divides) break;
        }

        diag.push_back(m.a[s][s] < 0 ? -m.a[s][s] : m.a[s][s]);
    }
    return diag;
}

} // namespace embcert
