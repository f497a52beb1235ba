#include <catch2/catch_amalgamated.hpp>

#include <sres/geometry.hpp>

using namespace sres;

namespace {
Polytope hull(const std::vector<LPoint>& pts) { return convex_hull_lattice(pts); }

std::vector<LPoint> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }
}  // namespace

TEST_CASE("hull of the unit square", "[geometry]") {
    auto P = hull(unit_square());
    REQUIRE(P.affine_dim == 2);
    REQUIRE(P.vertices.size() == 4);
    REQUIRE(P.facets.size() == 4);
    REQUIRE(volume(P) == Rat(1));
}

TEST_CASE("hull of a single point", "[geometry]") {
    auto P = hull({{3, -1}});
    REQUIRE(P.affine_dim == 0);
    REQUIRE(P.vertices.size() == 1);
    REQUIRE(P.equations.size() == 2);
    REQUIRE(P.contains(LPoint{3, -1}));
    REQUIRE_FALSE(P.contains(LPoint{3, 0}));
}

TEST_CASE("hull reports affine dimension of flat input", "[geometry]") {
    auto P = hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    REQUIRE(P.affine_dim == 1);
    REQUIRE(P.vertices.size() == 2);
    REQUIRE(volume(P) == Rat(0));  // not full-dimensional
}

// Reconstruction of the degree-5 sparse Newton polygon figure: a hexagon
// inside the dense degree-5 triangle, with a few interior points.
TEST_CASE("degree-5 sparse Newton polygon has 6 vertices", "[geometry]") {
    std::vector<LPoint> support{{1, 0}, {4, 0}, {4, 1}, {2, 3}, {0, 3}, {0, 1},
                                {2, 1}, {1, 2}, {3, 1}};
    auto P = hull(support);
    REQUIRE(P.affine_dim == 2);
    REQUIRE(P.vertices.size() == 6);
    for (const auto& v : P.vertices) REQUIRE(v[0] + v[1] <= Rat(5));
}

TEST_CASE("hull handles collinear boundary points", "[geometry]") {
    auto P = hull({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {1, 2}});
    REQUIRE(P.vertices.size() == 5);  // (1,0) sits inside the bottom edge
    auto Q = hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {0, 0, 2}, {1, 0, 0}});
    REQUIRE(Q.affine_dim == 3);
    REQUIRE(Q.vertices.size() == 4);
    REQUIRE(volume(Q) == Rat(8, 6));
}

TEST_CASE("minkowski sum with a point translates", "[geometry]") {
    auto P = hull(unit_square());
    auto O = hull({{0, 0}});
    auto S = minkowski_sum(P, O);
    REQUIRE(S.vertices == P.vertices);
}

TEST_CASE("segment plus segment is the unit square", "[geometry]") {
    auto Sx = hull({{0, 0}, {1, 0}});
    auto Sy = hull({{0, 0}, {0, 1}});
    auto S = minkowski_sum(Sx, Sy);
    REQUIRE(S.vertices.size() == 4);
    REQUIRE(volume(S) == Rat(1));
}

TEST_CASE("sum of three unit squares is the side-3 square", "[geometry]") {
    auto P = hull(unit_square());
    auto S = minkowski_sum(minkowski_sum(P, P), P);
    REQUIRE(S.vertices.size() == 4);
    // scaling identity Vol(kP) = k^n Vol(P)
    REQUIRE(volume(S) == Rat(9));
}

TEST_CASE("volume examples", "[geometry]") {
    REQUIRE(volume(hull(unit_square())) == Rat(1));
    REQUIRE(volume(hull({{0, 0}, {0, 1}})) == Rat(0));
}

TEST_CASE("mixed volume of coordinate segments", "[geometry]") {
    auto Sx = hull({{0, 0}, {1, 0}});
    auto Sy = hull({{0, 0}, {0, 1}});
    REQUIRE(mixed_volume({Sx, Sy}) == Rat(1));
}

TEST_CASE("mixed volume of two unit squares", "[geometry]") {
    auto P = hull(unit_square());
    REQUIRE(mixed_volume({P, P}) == Rat(2));
}

TEST_CASE("bilinear system: MV excluding each square is 2", "[geometry]") {
    auto P = hull(unit_square());
    // dropping any one of the three squares leaves (square, square)
    for (int i = 0; i < 3; ++i) REQUIRE(mixed_volume({P, P}) == Rat(2));
}

TEST_CASE("mixed volume is symmetric and multilinear", "[geometry]") {
    Rng rng(17);
    auto random_polytope = [&](int n) {
        std::vector<LPoint> pts;
        int cnt = static_cast<int>(rng.uniform(2, 4));
        for (int k = 0; k < cnt; ++k) {
            LPoint p(n);
            for (int j = 0; j < n; ++j) p[j] = rng.uniform(0, 3);
            pts.push_back(p);
        }
        return convex_hull_lattice(pts);
    };
    for (int trial = 0; trial < 5; ++trial) {
        auto A = random_polytope(2), B = random_polytope(2), C = random_polytope(2);
        REQUIRE(mixed_volume({A, B}) == mixed_volume({B, A}));
        auto AC = minkowski_sum(A, C);
        REQUIRE(mixed_volume({AC, B}) == mixed_volume({A, B}) + mixed_volume({C, B}));
    }
}

TEST_CASE("MV of repeated polytope equals n! times volume", "[geometry]") {
    auto Sq = hull(unit_square());
    REQUIRE(mixed_volume({Sq, Sq}) == Rat(2) * volume(Sq));
    auto Tri = hull({{0, 0}, {1, 0}, {0, 1}});
    REQUIRE(mixed_volume({Tri, Tri}) == Rat(2) * volume(Tri));
}

TEST_CASE("lattice points of the unit square", "[geometry]") {
    auto pts = lattice_points(hull(unit_square()));
    REQUIRE(pts.size() == 4);
}

TEST_CASE("lattice points of a quarter-translated side-3 square", "[geometry]") {
    // (Delta + delta) with delta = (1/4, 1/4) captures 9 interior-hitting points
    std::vector<QPoint> pts;
    for (const auto& v : std::vector<LPoint>{{0, 0}, {3, 0}, {0, 3}, {3, 3}}) {
        QPoint q{Rat(v[0]) + Rat(1, 4), Rat(v[1]) + Rat(1, 4)};
        pts.push_back(q);
    }
    auto P = convex_hull(pts);
    auto lp = lattice_points(P);
    REQUIRE(lp.size() == 9);
    for (const auto& p : lp) {
        REQUIRE(p[0] >= 1);
        REQUIRE(p[0] <= 3);
    }
}

TEST_CASE("lattice points of an empty polytope", "[geometry]") {
    Polytope P;
    REQUIRE(lattice_points(P).empty());
}

TEST_CASE("lattice point count is invariant under integer translation", "[geometry]") {
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<LPoint> pts;
        for (int k = 0; k < 5; ++k)
            pts.push_back({rng.uniform(0, 4), rng.uniform(0, 4)});
        auto P = hull(pts);
        LPoint t{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        std::vector<LPoint> shifted;
        for (auto p : pts) {
            p[0] += t[0];
            p[1] += t[1];
            shifted.push_back(p);
        }
        REQUIRE(lattice_points(P).size() == lattice_points(hull(shifted)).size());
    }
}

TEST_CASE("normal fan rays of the unit square", "[geometry]") {
    auto rays = normal_fan_rays(hull(unit_square()));
    std::vector<std::vector<Int>> expect{{Int(-1), Int(0)}, {Int(0), Int(-1)},
                                         {Int(0), Int(1)}, {Int(1), Int(0)}};
    std::sort(expect.begin(), expect.end());
    REQUIRE(rays == expect);
}

TEST_CASE("normal fan rays of the standard triangle", "[geometry]") {
    auto rays = normal_fan_rays(hull({{0, 0}, {1, 0}, {0, 1}}));
    std::vector<std::vector<Int>> expect{{Int(-1), Int(-1)}, {Int(0), Int(1)}, {Int(1), Int(0)}};
    std::sort(expect.begin(), expect.end());
    REQUIRE(rays == expect);
}

TEST_CASE("rays of a triangle-square Minkowski sum are the union", "[geometry]") {
    auto T = hull({{0, 0}, {1, 0}, {0, 1}});
    auto S = hull(unit_square());
    auto rays = normal_fan_rays(minkowski_sum(T, S));
    REQUIRE(rays.size() == 5);
}

TEST_CASE("normal fan rays demand full dimension", "[geometry]") {
    REQUIRE_THROWS_AS(normal_fan_rays(hull({{0, 0}, {1, 1}})), degenerate_input_error);
}

TEST_CASE("polytope from inequalities", "[geometry]") {
    // x >= 0, y >= 0, -x >= -2, -y >= -2: the side-2 square
    std::vector<std::vector<Int>> normals{{Int(1), Int(0)}, {Int(0), Int(1)},
                                          {Int(-1), Int(0)}, {Int(0), Int(-1)}};
    std::vector<Rat> offsets{Rat(0), Rat(0), Rat(-2), Rat(-2)};
    auto P = polytope_from_inequalities(normals, offsets);
    REQUIRE(P.vertices.size() == 4);
    REQUIRE(volume(P) == Rat(4));
    // infeasible system gives the empty polytope
    std::vector<Rat> bad{Rat(3), Rat(0), Rat(-2), Rat(-2)};
    REQUIRE(polytope_from_inequalities(normals, bad).empty());
}

TEST_CASE("triangulation covers the hull and references vertices", "[geometry]") {
    auto P = hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
    REQUIRE(P.vertices.size() == 4);
    Rat total(0);
    for (const auto& s : P.simplices) {
        REQUIRE(s.size() == 3);
        for (auto vi : s) REQUIRE(vi < P.vertices.size());
        Mat<Rat> m(2, std::vector<Rat>(2));
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < 2; ++j)
                m[r][j] = P.vertices[s[r + 1]][j] - P.vertices[s[0]][j];
        Rat d = det_fraction_free(m, Rat(0));
        total += (d < 0 ? -d : d);
    }
    REQUIRE(total / Rat(2) == volume(P));
    REQUIRE(volume(P) == Rat(4));
}
