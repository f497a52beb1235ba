#pragma once

#include <vector>

#include "numeric.hpp"

namespace sres {

using IMat = std::vector<std::vector<Int>>;
using IVec = std::vector<Int>;

inline IVec primitive(IVec v) {
    Int g(0);
    for (const auto& x : v) g = gcd(g, boost::multiprecision::abs(x));
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// Smith normal form invariant factors d_1 | d_2 | ... (nonzero ones only).
// Transforms are not tracked; this is used for ranks and saturation checks.
inline std::vector<Int> snf_invariant_factors(IMat a) {
    std::vector<Int> out;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // locate a nonzero pivot
        std::size_t pr = r0, pc = c0;
        bool found = false;
        for (std::size_t i = r0; i < rows && !found; ++i)
            for (std::size_t j = c0; j < cols && !found; ++j)
                if (a[i][j] != 0) { pr = i; pc = j; found = true; }
        if (!found) break;
        std::swap(a[r0], a[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][pc]);
        // clear row and column, restarting while remainders appear
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = r0 + 1; i < rows; ++i) {
                if (a[i][c0] == 0) continue;
                Int q = a[i][c0] / a[r0][c0];
                for (std::size_t j = c0; j < cols; ++j) a[i][j] -= q * a[r0][j];
                if (a[i][c0] != 0) { std::swap(a[r0], a[i]); dirty = true; }
            }
            for (std::size_t j = c0 + 1; j < cols; ++j) {
                if (a[r0][j] == 0) continue;
                Int q = a[r0][j] / a[r0][c0];
                for (std::size_t i = r0; i < rows; ++i) a[i][j] -= q * a[i][c0];
                if (a[r0][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][j]);
                    dirty = true;
                }
            }
        }
        out.push_back(boost::multiprecision::abs(a[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            Int g = gcd(out[i], out[j]);
            Int l = out[i] / g * out[j];
            out[i] = g;
            out[j] = l;
        }
    return out;
}

inline std::size_t int_rank(const IMat& a) { return snf_invariant_factors(a).size(); }

// Row Hermite normal form; the nonzero rows form a basis of the lattice
// spanned by the input rows.
struct Hnf {
    IMat rows;                   // basis rows, echelon form
    std::vector<std::size_t> pivots;
};

inline Hnf hnf_rows(IMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    Hnf out;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd out the column below r
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 &&
                    (best == rows ||
                     boost::multiprecision::abs(a[i][c]) < boost::multiprecision::abs(a[best][c])))
                    best = i;
            if (best == rows) break;
            std::swap(a[r], a[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        out.pivots.push_back(c);
        ++r;
    }
    // reduce entries above pivots for a canonical form
    for (std::size_t k = out.pivots.size(); k-- > 0;) {
        std::size_t c = out.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            Int q;
            if (a[i][c] >= 0) q = a[i][c] / a[k][c];
            else q = -Int((Int(-a[i][c]) + a[k][c] - 1) / a[k][c]);
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
        }
    }
    out.rows.assign(a.begin(), a.begin() + out.pivots.size());
    return out;
}

// Coordinates of v in the HNF basis; throws if v is not in the lattice.
inline IVec lattice_coordinates(const Hnf& basis, IVec v) {
    IVec x(basis.rows.size(), Int(0));
    for (std::size_t k = 0; k < basis.rows.size(); ++k) {
        std::size_t c = basis.pivots[k];
        if (v[c] % basis.rows[k][c] != 0)
            throw error("lattice_coordinates: vector not in lattice");
        Int q = v[c] / basis.rows[k][c];
        x[k] = q;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * basis.rows[k][j];
    }
    for (const auto& e : v)
        if (e != 0) throw error("lattice_coordinates: vector not in lattice");
    return x;
}

}  // namespace sres
