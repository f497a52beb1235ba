#pragma once

#include <optional>
#include <vector>

#include "intlat.hpp"
#include "support.hpp"

namespace sres {

// Ranks of the difference lattices L_J, the essential subsets and the
// codimension of the eliminant variety.
struct FamilyAnalysis {
    std::vector<std::pair<std::vector<int>, int>> subset_ranks;  // nonempty J -> rank(J)
    std::vector<std::vector<int>> essential_subsets;
    int codim = 0;  // max |J| - rank(J)
    std::optional<std::vector<int>> unique_essential;
    bool resultant_nontrivial = false;  // codim 1 with a unique essential family

    int rank_of(const std::vector<int>& J) const {
        for (const auto& [S, r] : subset_ranks)
            if (S == J) return r;
        throw error("FamilyAnalysis: unknown subset");
    }
};

namespace detail {
inline IMat difference_rows(const SupportFamily& A, const std::vector<int>& J) {
    IMat rows;
    for (int j : J) {
        const auto& s = A.supports[j];
        for (std::size_t k = 1; k < s.size(); ++k) {
            IVec r(A.n);
            for (int c = 0; c < A.n; ++c) r[c] = Int(s[k][c] - s[0][c]);
            rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) rows.push_back(IVec(A.n, Int(0)));
    return rows;
}
}  // namespace detail

inline constexpr std::size_t kMaxSupportsForSubsets = 12;

// Enumerates all nonempty subsets J, computes rank(J) of the difference
// lattice over Z, and reads off the essential subsets and the codimension.
inline FamilyAnalysis essential_families(const SupportFamily& A) {
    const std::size_t m = A.count();
    if (m > kMaxSupportsForSubsets)
        throw too_many_supports_error("essential_families: more than " +
                                      std::to_string(kMaxSupportsForSubsets) + " supports");
    FamilyAnalysis out;
    std::vector<int> rank_by_mask(1u << m, 0);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> J;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1u << j)) J.push_back(static_cast<int>(j));
        int r = static_cast<int>(int_rank(detail::difference_rows(A, J)));
        rank_by_mask[mask] = r;
        out.subset_ranks.emplace_back(J, r);
        out.codim = std::max(out.codim, static_cast<int>(J.size()) - r);
    }
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> I;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1u << j)) I.push_back(static_cast<int>(j));
        if (rank_by_mask[mask] != static_cast<int>(I.size()) - 1) continue;
        bool essential = true;
        // every proper nonempty subset must have rank >= its size
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
            int size = __builtin_popcount(sub);
            if (rank_by_mask[sub] < size) {
                essential = false;
                break;
            }
        }
        if (essential) out.essential_subsets.push_back(I);
    }
    if (out.essential_subsets.size() == 1) out.unique_essential = out.essential_subsets[0];
    out.resultant_nontrivial = (out.codim == 1 && out.essential_subsets.size() == 1);
    return out;
}

// The family restricted to the members of I, re-embedded in the sublattice
// L_I via a Hermite basis; each support is translated by its first point.
struct Restriction {
    SupportFamily family;      // in Z^{rank(L_I)}
    std::vector<int> members;  // original support indices
};

inline Restriction restrict_to_essential(const SupportFamily& A, const std::vector<int>& I) {
    IMat rows = detail::difference_rows(A, I);
    Hnf basis = hnf_rows(rows);
    const int r = static_cast<int>(basis.rows.size());
    if (r == 0) {
        // all supports in I are singletons after translation
        if (I.size() != 1) throw error("restrict_to_essential: rank 0 with several supports");
        Restriction out;
        out.members = I;
        out.family = SupportFamily(0, {std::vector<LPoint>{LPoint{}}});
        out.family.coeffs[0][0] = A.coeffs[I[0]][0];
        return out;
    }
    std::vector<std::vector<LPoint>> sup;
    std::vector<std::vector<Coeff>> cf;
    for (int i : I) {
        const auto& s = A.supports[i];
        std::vector<LPoint> ns;
        for (const auto& a : s) {
            IVec d(A.n);
            for (int c = 0; c < A.n; ++c) d[c] = Int(a[c] - s[0][c]);
            IVec coords = lattice_coordinates(basis, d);
            LPoint p(r);
            for (int c = 0; c < r; ++c) p[c] = coords[c].convert_to<long long>();
            ns.push_back(std::move(p));
        }
        sup.push_back(std::move(ns));
        cf.push_back(A.coeffs[i]);
    }
    Restriction out;
    out.members = I;
    out.family = SupportFamily(r, sup);
    // canonicalize() sorts lex per support; carry coefficients through the
    // same permutation by rebuilding from the sorted order
    for (std::size_t ii = 0; ii < sup.size(); ++ii) {
        for (std::size_t k = 0; k < sup[ii].size(); ++k) {
            int pos = out.family.point_index(ii, sup[ii][k]);
            if (pos < 0) throw error("restrict_to_essential: lost a point");
            out.family.coeffs[ii][pos] = cf[ii][k];
        }
    }
    return out;
}

}  // namespace sres
