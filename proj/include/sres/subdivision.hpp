#pragma once

#include <functional>
#include <vector>

#include "geometry.hpp"
#include "support.hpp"

namespace sres {

// Lifting values, one rational per (i, point of A_i).
struct Lifting {
    std::vector<std::vector<Rat>> values;

    static Lifting zero(const SupportFamily& A) {
        Lifting w;
        w.values.resize(A.count());
        for (std::size_t i = 0; i < A.count(); ++i) w.values[i].assign(A.supports[i].size(), Rat(0));
        return w;
    }
    static Lifting random_integer(const SupportFamily& A, Rng& rng, long long bound = (1LL << 20)) {
        Lifting w = zero(A);
        for (auto& vi : w.values)
            for (auto& v : vi) v = Rat(rng.uniform(0, bound - 1));
        return w;
    }
};

// The Cayley set Cay(A) in Z^{2n} with back-references to (i, point index).
struct CayleyConfig {
    int n = 0;
    std::vector<LPoint> points;
    std::vector<std::pair<int, int>> back;  // (support index, point index)
};

// Points (a, e_i) with e_0 = 0, ordered by (i, lex(a)).
inline CayleyConfig cayley_embed(const SupportFamily& A) {
    CayleyConfig C;
    C.n = A.n;
    const int m = static_cast<int>(A.count()) - 1;  // e_1..e_m
    for (std::size_t i = 0; i < A.count(); ++i) {
        for (std::size_t k = 0; k < A.supports[i].size(); ++k) {
            LPoint p = A.supports[i][k];
            for (int j = 0; j < m; ++j) p.push_back(i == static_cast<std::size_t>(j + 1) ? 1 : 0);
            C.points.push_back(std::move(p));
            C.back.emplace_back(static_cast<int>(i), static_cast<int>(k));
        }
    }
    return C;
}

enum class HullSide { lower, upper };

struct RegularSubdivision {
    std::vector<std::vector<int>> cells;  // point indices per maximal cell
    int config_affine_dim = 0;            // affine dim of the unlifted points
};

// Cells of the regular subdivision induced by lifting `lift`: projections of
// the lower (or upper) hull facets of the lifted points.  Each cell lists the
// indices of every point lying on the corresponding facet, so a cell is a
// triangulation simplex exactly when the lifting is generic.
inline RegularSubdivision regular_subdivision_ex(const std::vector<QPoint>& points,
                                                 const std::vector<Rat>& lift,
                                                 HullSide side = HullSide::lower) {
    if (points.empty()) return {};
    if (points.size() != lift.size()) throw error("regular_subdivision: lifting size mismatch");
    const std::size_t D = points[0].size();
    RegularSubdivision out;
    std::vector<int> all(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    if (points.size() == 1) {
        out.cells = {all};
        return out;
    }

    std::vector<QPoint> lifted(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        lifted[i] = points[i];
        lifted[i].push_back(side == HullSide::lower ? lift[i] : -lift[i]);
    }
    Polytope LP = convex_hull(lifted, /*with_triangulation=*/false);

    // A hull equation involving the lift coordinate means the lifting is an
    // affine function of the points: a single trivial cell.
    for (const auto& e : LP.equations)
        if (e.normal[D] != 0) {
            out.cells = {all};
            out.config_affine_dim = LP.affine_dim;
            return out;
        }
    out.config_affine_dim = LP.affine_dim - 1;

    for (const auto& f : LP.facets) {
        if (f.plane.normal[D] <= 0) continue;  // keep lower facets
        std::vector<int> members;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (dot_iq(f.plane.normal, lifted[i]) == f.plane.offset)
                members.push_back(static_cast<int>(i));
        out.cells.push_back(std::move(members));
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

inline std::vector<std::vector<int>> regular_subdivision(const std::vector<QPoint>& points,
                                                         const std::vector<Rat>& lift,
                                                         HullSide side = HullSide::lower) {
    return regular_subdivision_ex(points, lift, side).cells;
}

// A full cell of a mixed subdivision with its component structure.
struct MixedCell {
    std::vector<std::vector<int>> comp;  // per support: point indices into A_i
    std::vector<Polytope> comp_hulls;
    Polytope cell;                       // sum of the component hulls
    std::vector<int> comp_dims;
    int cayley_members = 0;
    bool tight = false;                  // dims sum to n
    int mixed_index = -1;                // i for an i-mixed cell, else -1

    const LPoint& zero_dim_point(const SupportFamily& A) const {
        if (mixed_index < 0) throw error("MixedCell: not a mixed cell");
        return A.supports[mixed_index][comp[mixed_index][0]];
    }
};

struct MixedSubdivision {
    Lifting lifting;
    std::vector<MixedCell> cells;  // full cells only
    bool tight = false;            // every full cell is tight
    bool triangulation = false;    // every Cayley cell is a simplex

    // index of the full cell whose interior contains x, or -1
    int locate(const QPoint& x) const {
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].cell.contains(x)) return static_cast<int>(c);
        return -1;
    }
    int locate_strict(const QPoint& x) const {
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].cell.contains_strictly(x)) return static_cast<int>(c);
        return -1;
    }
};

// Applies the Cayley trick: the regular subdivision of the lifted Cayley
// points maps cell-by-cell to a mixed subdivision of the Minkowski sum, the
// component structure being read off the e_i blocks.
inline MixedSubdivision mixed_subdivision(const SupportFamily& A, const Lifting& w,
                                          HullSide side = HullSide::lower) {
    CayleyConfig C = cayley_embed(A);
    std::vector<QPoint> pts;
    std::vector<Rat> lift;
    pts.reserve(C.points.size());
    for (std::size_t i = 0; i < C.points.size(); ++i) {
        pts.push_back(to_q(C.points[i]));
        lift.push_back(w.values[C.back[i].first][C.back[i].second]);
    }
    auto reg = regular_subdivision_ex(pts, lift, side);

    MixedSubdivision S;
    S.lifting = w;
    S.tight = true;
    S.triangulation = true;
    for (const auto& members : reg.cells) {
        MixedCell cell;
        cell.comp.resize(A.count());
        cell.cayley_members = static_cast<int>(members.size());
        for (int m : members) cell.comp[C.back[m].first].push_back(C.back[m].second);
        int dim_sum = 0;
        int zero_dim_count = 0;
        for (std::size_t i = 0; i < A.count(); ++i) {
            if (cell.comp[i].empty())
                throw error("mixed_subdivision: maximal cell misses a support");
            std::vector<LPoint> cpts;
            for (int k : cell.comp[i]) cpts.push_back(A.supports[i][k]);
            cell.comp_hulls.push_back(convex_hull_lattice(cpts));
            int d = cell.comp_hulls.back().affine_dim;
            cell.comp_dims.push_back(d);
            dim_sum += d;
            if (d == 0) ++zero_dim_count;
        }
        cell.cell = cell.comp_hulls[0];
        for (std::size_t i = 1; i < A.count(); ++i)
            cell.cell = minkowski_sum(cell.cell, cell.comp_hulls[i]);
        cell.tight = (dim_sum == A.n);
        if (!cell.tight) S.tight = false;
        if (zero_dim_count == 1 && cell.tight) {
            for (std::size_t i = 0; i < A.count(); ++i)
                if (cell.comp_dims[i] == 0) cell.mixed_index = static_cast<int>(i);
        }
        S.cells.push_back(std::move(cell));
    }
    // simpliciality of the Cayley subdivision: every cell uses exactly
    // (affine dim of Cay) + 1 points
    for (const auto& c : S.cells)
        if (c.cayley_members != reg.config_affine_dim + 1) S.triangulation = false;
    return S;
}

// Samples integer liftings until the induced subdivision is tight
// (and simplicial when `need_triangulation`); 16 retries before giving up.
inline MixedSubdivision random_tight_subdivision(const SupportFamily& A, Rng& rng,
                                                 bool need_triangulation = false,
                                                 HullSide side = HullSide::lower,
                                                 int max_retries = 16) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Lifting w = Lifting::random_integer(A, rng);
        MixedSubdivision S = mixed_subdivision(A, w, side);
        if (S.tight && (!need_triangulation || S.triangulation)) return S;
    }
    throw retry_exhausted_error("random_tight_subdivision: no tight subdivision after retries");
}

// True iff every cell of fine sits inside a cell of coarse componentwise
// (componentwise containment implies containment of the sums).
inline bool refine_check(const MixedSubdivision& coarse, const MixedSubdivision& fine) {
    for (const auto& cf : fine.cells) {
        bool found = false;
        for (const auto& cc : coarse.cells) {
            bool ok = true;
            for (std::size_t i = 0; i < cf.comp_hulls.size() && ok; ++i)
                for (const auto& v : cf.comp_hulls[i].vertices)
                    if (!cc.comp_hulls[i].contains(v)) {
                        ok = false;
                        break;
                    }
            if (ok) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

// Value of the inf-convolution lifting function at x, read off the affine
// function of the full cell containing x.
inline Rat lifting_value_at(const SupportFamily& A, const MixedSubdivision& S, const QPoint& x) {
    int ci = S.locate(x);
    if (ci < 0) throw error("lifting_value_at: point outside the subdivision");
    const MixedCell& cell = S.cells[ci];
    // graph samples: sums of one point per component with their lifted values
    std::vector<QPoint> samples;
    std::vector<Rat> heights;
    std::function<void(std::size_t, QPoint, Rat)> rec = [&](std::size_t i, QPoint acc, Rat h) {
        if (i == cell.comp.size()) {
            samples.push_back(acc);
            heights.push_back(h);
            return;
        }
        for (int k : cell.comp[i]) {
            QPoint nxt = acc;
            const LPoint& p = A.supports[i][k];
            for (std::size_t j = 0; j < nxt.size(); ++j) nxt[j] += Rat(p[j]);
            rec(i + 1, std::move(nxt), h + S.lifting.values[i][k]);
        }
    };
    rec(0, QPoint(A.n, Rat(0)), Rat(0));
    // fit the affine function <g, x> + c through the graph samples
    Mat<Rat> m;
    std::vector<Rat> rhs;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        std::vector<Rat> row = samples[s];
        row.push_back(Rat(1));
        m.push_back(row);
        rhs.push_back(heights[s]);
    }
    std::vector<Rat> sol;
    if (!solve_linear(m, rhs, sol, Rat(0)))
        throw error("lifting_value_at: affine fit failed");
    Rat v = sol[A.n];
    for (int j = 0; j < A.n; ++j) v += sol[j] * x[j];
    return v;
}

}  // namespace sres
