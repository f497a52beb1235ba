#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "numeric.hpp"
#include "poly.hpp"

namespace sres {

template <typename T>
using Mat = std::vector<std::vector<T>>;

template <typename T>
std::size_t mat_rows(const Mat<T>& m) { return m.size(); }
template <typename T>
std::size_t mat_cols(const Mat<T>& m) { return m.empty() ? 0 : m[0].size(); }

// Fraction-free (Bareiss) determinant; exact over any field and over the
// integers embedded in Rat.
template <typename K>
K det_fraction_free(Mat<K> a, const K& like) {
    const std::size_t n = mat_rows(a);
    K zero = field_traits<K>::zero(like);
    K one = field_traits<K>::one(like);
    if (n == 0) return one;
    if (n != mat_cols(a)) throw error("det: matrix not square");
    K prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (field_traits<K>::is_zero(a[k][k])) {
            std::size_t p = k + 1;
            while (p < n && field_traits<K>::is_zero(a[p][k])) ++p;
            if (p == n) return zero;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    K d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

// Cofactor-expansion determinant, used as an independent cross-check in tests.
template <typename K>
K det_cofactor(const Mat<K>& a, const K& like) {
    const std::size_t n = mat_rows(a);
    if (n == 0) return field_traits<K>::one(like);
    if (n == 1) return a[0][0];
    K acc = field_traits<K>::zero(like);
    for (std::size_t j = 0; j < n; ++j) {
        if (field_traits<K>::is_zero(a[0][j])) continue;
        Mat<K> m(n - 1, std::vector<K>());
        for (std::size_t i = 1; i < n; ++i) {
            m[i - 1].reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) m[i - 1].push_back(a[i][k]);
        }
        K term = a[0][j] * det_cofactor(m, like);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

// Determinant of a matrix of sparse polynomials by dynamic programming over
// column subsets: minor(k, S) for the first k rows and columns S.  Avoids
// division entirely; feasible for the small symbolic matrices we build.
template <typename K>
Poly<K> det_poly(const Mat<Poly<K>>& a, std::size_t dim_limit = 10) {
    const std::size_t n = mat_rows(a);
    if (n != mat_cols(a)) throw error("det: matrix not square");
    if (n > dim_limit)
        throw symbolic_too_large_error("symbolic determinant of dimension " + std::to_string(n) +
                                       " exceeds limit " + std::to_string(dim_limit));
    if (n == 0) return Poly<K>::constant(field_traits<K>::one(K{}));
    std::vector<std::string> universe;
    for (const auto& row : a)
        for (const auto& p : row)
            for (const auto& v : p.vars())
                if (std::find(universe.begin(), universe.end(), v) == universe.end())
                    universe.push_back(v);
    std::unordered_map<std::uint32_t, Poly<K>> cur;
    cur[0] = Poly<K>();  // placeholder; minor over 0 rows is the constant 1
    bool cur_is_one = true;
    for (std::size_t k = 0; k < n; ++k) {
        std::unordered_map<std::uint32_t, Poly<K>> next;
        for (const auto& [mask, minor] : cur) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t bit = 1u << j;
                if (mask & bit) continue;
                const Poly<K>& e = a[k][j];
                if (e.is_zero()) continue;
                // Laplace expansion along row k: sign is (-1)^(k + position of j
                // within the used-column set)
                int pos = 0;
                for (std::size_t l = 0; l < j; ++l)
                    if (mask & (1u << l)) ++pos;
                Poly<K> contrib = cur_is_one ? e.aligned(universe) : e * minor;
                if ((pos + static_cast<int>(k)) % 2) contrib = contrib.negated();
                auto it = next.find(mask | bit);
                if (it == next.end()) next[mask | bit] = contrib;
                else it->second = it->second + contrib;
            }
        }
        cur = std::move(next);
        cur_is_one = false;
        if (cur.empty()) return Poly<K>(universe);
    }
    auto it = cur.find((n >= 32 ? 0 : ((1u << n) - 1)));
    return it == cur.end() ? Poly<K>(universe) : it->second;
}

// Reduced row echelon form in place; returns pivot column indices.
template <typename K>
std::vector<std::size_t> rref(Mat<K>& a, const K& like) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = mat_rows(a), cols = mat_cols(a);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field_traits<K>::is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        K inv = field_traits<K>::one(like) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field_traits<K>::is_zero(a[i][c])) continue;
            K f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename K>
std::size_t rank(Mat<K> a, const K& like) {
    return rref(a, like).size();
}

// Basis of the right null space {x : A x = 0}.
template <typename K>
std::vector<std::vector<K>> kernel(Mat<K> a, std::size_t cols, const K& like) {
    K zero = field_traits<K>::zero(like);
    K one = field_traits<K>::one(like);
    if (a.empty()) {
        std::vector<std::vector<K>> basis;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<K> v(cols, zero);
            v[j] = one;
            basis.push_back(v);
        }
        return basis;
    }
    auto pivots = rref(a, like);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(cols, zero);
        v[j] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][j];
        basis.push_back(v);
    }
    return basis;
}

// Solves A x = b; returns false when the system is inconsistent.  With more
// unknowns than equations the free variables are set to zero.
template <typename K>
bool solve_linear(Mat<K> a, std::vector<K> b, std::vector<K>& x, const K& like) {
    const std::size_t rows = mat_rows(a), cols = mat_cols(a);
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = rref(a, like);
    K zero = field_traits<K>::zero(like);
    // a pivot in the appended column means no solution
    if (!pivots.empty() && pivots.back() == cols) return false;
    x.assign(cols, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return true;
}

// Matrix with opaque row/column labels; entries are polynomials or scalars.
template <typename T>
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Mat<T> entries;

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }

    LabeledMatrix submatrix(const std::vector<std::size_t>& ri,
                            const std::vector<std::size_t>& ci) const {
        LabeledMatrix out;
        for (auto i : ri) out.row_labels.push_back(row_labels[i]);
        for (auto j : ci) out.col_labels.push_back(col_labels[j]);
        out.entries.resize(ri.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (auto j : ci) out.entries[i].push_back(entries[ri[i]][j]);
        return out;
    }
};

template <typename K>
K det(const LabeledMatrix<K>& m, const K& like) {
    return det_fraction_free(m.entries, like);
}

template <typename K>
Poly<K> det(const LabeledMatrix<Poly<K>>& m, std::size_t dim_limit = 10) {
    return det_poly(m.entries, dim_limit);
}

}  // namespace sres
