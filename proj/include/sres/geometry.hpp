#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"

namespace sres {

using LPoint = std::vector<long long>;  // lattice point
using QPoint = std::vector<Rat>;        // rational point

inline QPoint to_q(const LPoint& p) {
    QPoint q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return q;
}

struct Hyperplane {
    std::vector<Int> normal;  // primitive integer
    Rat offset;               // <normal, x> >= offset for facets, == for equations
};

inline Rat dot_iq(const std::vector<Int>& n, const QPoint& x) {
    Rat s(0);
    for (std::size_t i = 0; i < n.size(); ++i) s += Rat(n[i]) * x[i];
    return s;
}

inline Rat dot_qq(const QPoint& a, const QPoint& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Scales a rational normal (and offset) to primitive integer form, preserving
// orientation.
inline Hyperplane make_primitive(const QPoint& n, const Rat& c) {
    Int l(1);
    for (const auto& x : n) l = lcm(l, den(x));
    l = lcm(l, den(c));
    std::vector<Int> ni(n.size());
    Int g(0);
    for (std::size_t i = 0; i < n.size(); ++i) {
        ni[i] = num(n[i]) * (l / den(n[i]));
        g = gcd(g, boost::multiprecision::abs(ni[i]));
    }
    Rat ci = c * Rat(l);
    if (g > 1) {
        for (auto& x : ni) x /= g;
        ci /= Rat(g);
    }
    return Hyperplane{std::move(ni), std::move(ci)};
}

struct Facet {
    Hyperplane plane;                    // ambient coordinates, inner normal
    std::vector<std::size_t> vertices;   // indices into Polytope::vertices
};

// Exact V- and H-representations with a triangulation.  Lower-dimensional
// hulls carry their affine hull as explicit equations plus a chart.
struct Polytope {
    int ambient_dim = 0;
    int affine_dim = -1;                 // -1 for the empty polytope
    std::vector<QPoint> vertices;        // lex-sorted
    std::vector<Facet> facets;
    std::vector<Hyperplane> equations;   // affine hull
    std::vector<std::vector<std::size_t>> simplices;  // triangulation over vertex indices

    QPoint chart_origin;                 // x = origin + sum_k t_k * basis[k]
    std::vector<QPoint> chart_basis;

    bool empty() const { return affine_dim < 0; }

    bool on_affine_hull(const QPoint& x) const {
        for (const auto& e : equations)
            if (dot_iq(e.normal, x) != e.offset) return false;
        return true;
    }
    bool contains(const QPoint& x) const {
        if (empty()) return false;
        if (!on_affine_hull(x)) return false;
        if (affine_dim == 0) return x == vertices[0];
        for (const auto& f : facets)
            if (dot_iq(f.plane.normal, x) < f.plane.offset) return false;
        return true;
    }
    // Interior relative to the affine hull.
    bool contains_strictly(const QPoint& x) const {
        if (empty() || affine_dim == 0) return false;
        if (!on_affine_hull(x)) return false;
        for (const auto& f : facets)
            if (dot_iq(f.plane.normal, x) <= f.plane.offset) return false;
        return true;
    }
    bool contains(const LPoint& x) const { return contains(to_q(x)); }
};

namespace detail {

// Normal of the hyperplane through d affinely independent points (chart dim d).
inline QPoint hyperplane_normal(const std::vector<QPoint>& pts,
                                const std::vector<std::size_t>& idx) {
    const std::size_t d = pts[idx[0]].size();
    Mat<Rat> m;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        std::vector<Rat> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = pts[idx[k]][j] - pts[idx[0]][j];
        m.push_back(std::move(row));
    }
    auto ker = kernel(m, d, Rat(0));
    if (ker.size() != 1) throw error("hull: degenerate facet");
    return ker[0];
}

struct SFacet {
    std::vector<std::size_t> verts;
    QPoint normal;  // inner, chart coordinates
    Rat offset;
};

// Beneath-and-beyond facet enumeration for points spanning R^d.  Coplanar
// insertions never create a new hyperplane, so degenerate horizon ridges are
// skipped; the facet hyperplane set stays exact.
inline std::vector<SFacet> facet_hull(const std::vector<QPoint>& pts,
                                      const std::vector<std::size_t>& seed) {
    const std::size_t d = pts[0].size();
    QPoint centroid(d, Rat(0));
    for (auto i : seed)
        for (std::size_t j = 0; j < d; ++j) centroid[j] += pts[i][j];
    for (std::size_t j = 0; j < d; ++j) centroid[j] /= Rat(static_cast<long long>(seed.size()));

    auto make_facet = [&](std::vector<std::size_t> vs) {
        SFacet f;
        std::sort(vs.begin(), vs.end());
        f.normal = hyperplane_normal(pts, vs);
        f.offset = dot_qq(f.normal, pts[vs[0]]);
        f.verts = std::move(vs);
        Rat v = dot_qq(f.normal, centroid);
        if (v < f.offset) {
            for (auto& x : f.normal) x = -x;
            f.offset = -f.offset;
        } else if (v == f.offset) {
            throw error("hull: centroid on facet");
        }
        return f;
    };

    std::vector<SFacet> facets;
    for (std::size_t skip = 0; skip < seed.size(); ++skip) {
        std::vector<std::size_t> vs;
        for (std::size_t k = 0; k < seed.size(); ++k)
            if (k != skip) vs.push_back(seed[k]);
        facets.push_back(make_facet(std::move(vs)));
    }

    std::set<std::size_t> in_seed(seed.begin(), seed.end());
    for (std::size_t q = 0; q < pts.size(); ++q) {
        if (in_seed.count(q)) continue;
        std::vector<char> visible(facets.size(), 0);
        bool any = false;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (dot_qq(facets[fi].normal, pts[q]) < facets[fi].offset) {
                visible[fi] = 1;
                any = true;
            }
        }
        if (!any) continue;  // beneath every facet: inside or on the boundary
        std::map<std::vector<std::size_t>, int> ridge_count;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (!visible[fi]) continue;
            const auto& vs = facets[fi].verts;
            for (std::size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t k = 0; k < vs.size(); ++k)
                    if (k != skip) ridge.push_back(vs[k]);
                ridge_count[ridge]++;
            }
        }
        std::vector<SFacet> next;
        for (std::size_t fi = 0; fi < facets.size(); ++fi)
            if (!visible[fi]) next.push_back(std::move(facets[fi]));
        for (const auto& [ridge, cnt] : ridge_count) {
            if (cnt != 1) continue;  // interior to the visible region
            if (ridge.empty()) {     // d == 1: the new facet is q itself
                next.push_back(make_facet({q}));
                continue;
            }
            // q may be affinely dependent on the ridge when it lies on the
            // hyperplane of the invisible neighbour; that hyperplane already
            // represents the merged facet, so no new facet is needed.
            Mat<Rat> m;
            for (std::size_t k = 1; k < ridge.size(); ++k) {
                std::vector<Rat> row(d);
                for (std::size_t j = 0; j < d; ++j)
                    row[j] = pts[ridge[k]][j] - pts[ridge[0]][j];
                m.push_back(std::move(row));
            }
            {
                std::vector<Rat> row(d);
                for (std::size_t j = 0; j < d; ++j) row[j] = pts[q][j] - pts[ridge[0]][j];
                m.push_back(std::move(row));
            }
            if (rank(m, Rat(0)) != ridge.size()) continue;
            auto vs = ridge;
            vs.push_back(q);
            next.push_back(make_facet(std::move(vs)));
        }
        facets = std::move(next);
    }
    return facets;
}

}  // namespace detail

Polytope convex_hull(std::vector<QPoint> pts, bool with_triangulation);

namespace detail {

// Triangulation by coning the lex-least vertex over the facets avoiding it;
// facets are triangulated recursively.
inline std::vector<std::vector<std::size_t>> cone_triangulation(const Polytope& P) {
    std::vector<std::vector<std::size_t>> out;
    if (P.affine_dim <= 0) {
        out.push_back({0});
        return out;
    }
    if (P.affine_dim == 1) {
        out.push_back({0, P.vertices.size() - 1});
        return out;
    }
    const std::size_t apex = 0;  // vertices are lex-sorted
    for (const auto& f : P.facets) {
        if (std::find(f.vertices.begin(), f.vertices.end(), apex) != f.vertices.end()) continue;
        std::vector<QPoint> fpts;
        for (auto vi : f.vertices) fpts.push_back(P.vertices[vi]);
        Polytope FP = convex_hull(fpts, true);
        // map facet-polytope vertex indices back to P's vertex indices
        std::vector<std::size_t> back(FP.vertices.size());
        for (std::size_t i = 0; i < FP.vertices.size(); ++i) {
            auto it = std::lower_bound(P.vertices.begin(), P.vertices.end(), FP.vertices[i]);
            back[i] = static_cast<std::size_t>(it - P.vertices.begin());
        }
        for (const auto& s : FP.simplices) {
            std::vector<std::size_t> simplex{apex};
            for (auto vi : s) simplex.push_back(back[vi]);
            std::sort(simplex.begin(), simplex.end());
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

}  // namespace detail

// Convex hull with exact rational arithmetic; insertion order is fixed by the
// lexicographic point sort, so output is deterministic.  Lower-dimensional
// input is reported via affine_dim and hull equations.
inline Polytope convex_hull(std::vector<QPoint> pts, bool with_triangulation = true) {
    Polytope P;
    if (pts.empty()) return P;
    P.ambient_dim = static_cast<int>(pts[0].size());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t D = pts[0].size();

    // greedy affine basis in lex order
    std::vector<std::size_t> basis_idx{0};
    Mat<Rat> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Mat<Rat> trial = diffs;
        std::vector<Rat> row(D);
        for (std::size_t j = 0; j < D; ++j) row[j] = pts[i][j] - pts[0][j];
        trial.push_back(row);
        if (rank(trial, Rat(0)) == trial.size()) {
            diffs = std::move(trial);
            basis_idx.push_back(i);
        }
    }
    const std::size_t d = basis_idx.size() - 1;
    P.affine_dim = static_cast<int>(d);
    P.chart_origin = pts[0];
    for (std::size_t k = 1; k <= d; ++k) {
        QPoint b(D);
        for (std::size_t j = 0; j < D; ++j) b[j] = pts[basis_idx[k]][j] - pts[0][j];
        P.chart_basis.push_back(b);
    }

    {
        Mat<Rat> m = diffs;  // d x D; kernel gives the affine hull equations
        auto ker = kernel(m, D, Rat(0));
        for (auto& e : ker) {
            Rat c = dot_qq(e, pts[0]);
            P.equations.push_back(make_primitive(e, c));
        }
    }

    if (d == 0) {
        P.vertices = {pts[0]};
        P.simplices = {{0}};
        return P;
    }

    // chart coordinates: solve through d independent coordinate rows
    std::vector<std::size_t> rows;
    {
        Mat<Rat> acc;
        for (std::size_t j = 0; j < D && rows.size() < d; ++j) {
            std::vector<Rat> row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = P.chart_basis[k][j];
            Mat<Rat> trial = acc;
            trial.push_back(row);
            if (rank(trial, Rat(0)) == trial.size()) {
                acc = std::move(trial);
                rows.push_back(j);
            }
        }
    }
    Mat<Rat> bsq(d, std::vector<Rat>(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) bsq[r][k] = P.chart_basis[k][rows[r]];
    auto chart_of = [&](const QPoint& x) {
        std::vector<Rat> rhs(d), t;
        for (std::size_t r = 0; r < d; ++r) rhs[r] = x[rows[r]] - P.chart_origin[rows[r]];
        Mat<Rat> m = bsq;
        if (!solve_linear(m, rhs, t, Rat(0))) throw error("hull: chart solve failed");
        return t;
    };

    std::vector<QPoint> cpts(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) cpts[i] = chart_of(pts[i]);

    auto sfacets = detail::facet_hull(cpts, basis_idx);

    // merge simplicial facets by hyperplane and collect tight points
    struct MFacet {
        QPoint normal;
        Rat offset;
        std::vector<std::size_t> pts_on;
    };
    std::map<std::pair<std::vector<Int>, Rat>, MFacet> merged;
    for (const auto& f : sfacets) {
        auto hp = make_primitive(f.normal, f.offset);
        auto key = std::make_pair(hp.normal, hp.offset);
        if (merged.count(key)) continue;
        MFacet mf;
        mf.normal = f.normal;
        mf.offset = f.offset;
        for (std::size_t i = 0; i < cpts.size(); ++i)
            if (dot_qq(f.normal, cpts[i]) == f.offset) mf.pts_on.push_back(i);
        merged[key] = std::move(mf);
    }

    std::vector<const MFacet*> mlist;
    for (const auto& [key, mf] : merged) mlist.push_back(&mf);
    std::vector<std::vector<std::size_t>> facets_of_point(pts.size());
    for (std::size_t fi = 0; fi < mlist.size(); ++fi)
        for (auto p : mlist[fi]->pts_on) facets_of_point[p].push_back(fi);

    std::vector<bool> is_vertex(pts.size(), false);
    bool all_vertices = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (facets_of_point[i].size() >= d) {
            Mat<Rat> m;
            for (auto fi : facets_of_point[i]) m.push_back(mlist[fi]->normal);
            if (rank(m, Rat(0)) == d) {
                is_vertex[i] = true;
                continue;
            }
        }
        all_vertices = false;
    }

    if (!all_vertices) {
        std::vector<QPoint> vpts;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (is_vertex[i]) vpts.push_back(pts[i]);
        return convex_hull(std::move(vpts), with_triangulation);
    }

    P.vertices = pts;

    // lift chart facets to ambient hyperplanes: solve B^T w = normal
    for (const auto* mf : mlist) {
        Mat<Rat> m(d, std::vector<Rat>(D));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < D; ++j) m[k][j] = P.chart_basis[k][j];
        std::vector<Rat> w;
        if (!solve_linear(m, mf->normal, w, Rat(0))) throw error("hull: facet lift failed");
        Rat c = dot_qq(w, pts[mf->pts_on[0]]);
        Facet F;
        F.plane = make_primitive(w, c);
        F.vertices = mf->pts_on;
        P.facets.push_back(std::move(F));
    }
    std::sort(P.facets.begin(), P.facets.end(), [](const Facet& a, const Facet& b) {
        return std::make_pair(a.plane.normal, a.plane.offset) <
               std::make_pair(b.plane.normal, b.plane.offset);
    });

    if (with_triangulation) P.simplices = detail::cone_triangulation(P);
    return P;
}

inline Polytope convex_hull_lattice(const std::vector<LPoint>& pts, bool with_triangulation = true) {
    std::vector<QPoint> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.push_back(to_q(p));
    return convex_hull(std::move(q), with_triangulation);
}

// Exact Euclidean volume via the stored triangulation; 0 unless full-dim.
inline Rat volume(const Polytope& P) {
    if (P.empty() || P.affine_dim < P.ambient_dim) return Rat(0);
    const std::size_t d = static_cast<std::size_t>(P.ambient_dim);
    if (d == 0) return Rat(0);
    Rat total(0);
    Int fact(1);
    for (std::size_t k = 2; k <= d; ++k) fact *= Int(k);
    for (const auto& s : P.simplices) {
        Mat<Rat> m(d, std::vector<Rat>(d));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t j = 0; j < d; ++j)
                m[r][j] = P.vertices[s[r + 1]][j] - P.vertices[s[0]][j];
        Rat dv = det_fraction_free(m, Rat(0));
        if (dv < 0) dv = -dv;
        total += dv;
    }
    return total / Rat(fact);
}

inline Polytope minkowski_sum(const Polytope& P, const Polytope& Q, bool with_triangulation = true) {
    if (P.empty() || Q.empty()) return Polytope{};
    if (P.ambient_dim != Q.ambient_dim) throw error("minkowski_sum: dimension mismatch");
    std::vector<QPoint> sums;
    sums.reserve(P.vertices.size() * Q.vertices.size());
    for (const auto& a : P.vertices)
        for (const auto& b : Q.vertices) {
            QPoint s(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
            sums.push_back(std::move(s));
        }
    return convex_hull(std::move(sums), with_triangulation);
}

// Mixed volume of n polytopes in R^n by inclusion-exclusion over subsets.
inline Rat mixed_volume(const std::vector<Polytope>& polys) {
    const std::size_t n = polys.size();
    if (n == 0) return Rat(1);
    for (const auto& P : polys)
        if (P.empty() || static_cast<std::size_t>(P.ambient_dim) != n)
            throw error("mixed_volume: need n polytopes in dimension n");
    Rat acc(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Polytope S;
        bool first = true;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ++count;
            S = first ? polys[i] : minkowski_sum(S, polys[i]);
            first = false;
        }
        Rat v = volume(S);
        if ((n - count) % 2 == 1) v = -v;
        acc += v;
    }
    return acc;
}

// All integer points of a bounded polytope (possibly rationally translated),
// by bounding-box scan filtered through the H-representation.
inline std::vector<LPoint> lattice_points(const Polytope& P) {
    std::vector<LPoint> out;
    if (P.empty()) return out;
    const std::size_t D = static_cast<std::size_t>(P.ambient_dim);
    if (D == 0) {
        out.push_back({});
        return out;
    }
    std::vector<long long> lo(D), hi(D);
    for (std::size_t j = 0; j < D; ++j) {
        Rat mn = P.vertices[0][j], mx = P.vertices[0][j];
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        Int cn = num(mn) >= 0 ? (num(mn) + den(mn) - 1) / den(mn) : num(mn) / den(mn);
        Int fx = num(mx) >= 0 ? num(mx) / den(mx) : (num(mx) - den(mx) + 1) / den(mx);
        lo[j] = cn.convert_to<long long>();
        hi[j] = fx.convert_to<long long>();
        if (lo[j] > hi[j]) return out;
    }
    LPoint cur(D);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == D) {
            if (P.contains(cur)) out.push_back(cur);
            return;
        }
        for (long long v = lo[j]; v <= hi[j]; ++v) {
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

// Primitive inner normals of the facets; requires a full-dimensional input.
inline std::vector<std::vector<Int>> normal_fan_rays(const Polytope& P) {
    if (P.empty() || P.affine_dim != P.ambient_dim)
        throw degenerate_input_error("normal_fan_rays: polytope is not full-dimensional");
    std::vector<std::vector<Int>> rays;
    for (const auto& f : P.facets) rays.push_back(f.plane.normal);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

// Vertices of {x : <normal_j, x> >= offset_j} by solving all d-subsets of the
// inequalities; intended for the small divisor polytopes.
inline Polytope polytope_from_inequalities(const std::vector<std::vector<Int>>& normals,
                                           const std::vector<Rat>& offsets,
                                           bool with_triangulation = true) {
    const std::size_t m = normals.size();
    if (m == 0) throw error("polytope_from_inequalities: no inequalities");
    const std::size_t d = normals[0].size();
    std::vector<QPoint> verts;
    std::vector<std::size_t> idx(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == d) {
            Mat<Rat> a(d, std::vector<Rat>(d));
            std::vector<Rat> b(d);
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t j = 0; j < d; ++j) a[r][j] = Rat(normals[idx[r]][j]);
                b[r] = offsets[idx[r]];
            }
            Mat<Rat> chk = a;
            if (rank(chk, Rat(0)) != d) return;
            std::vector<Rat> x;
            if (!solve_linear(a, b, x, Rat(0))) return;
            for (std::size_t j = 0; j < m; ++j) {
                Rat v(0);
                for (std::size_t l = 0; l < d; ++l) v += Rat(normals[j][l]) * x[l];
                if (v < offsets[j]) return;
            }
            verts.push_back(x);
            return;
        }
        for (std::size_t i = start; i + (d - k) <= m; ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    if (verts.empty()) return Polytope{};
    return convex_hull(std::move(verts), with_triangulation);
}

}  // namespace sres
