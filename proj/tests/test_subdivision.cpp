#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <sres/subdivision.hpp>

using namespace sres;

namespace {

std::vector<LPoint> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

// Three bilinear squares with the staircase lifting w_i(a) = c_i*(a_x + a_y),
// c = (0, 1, 3): nine full cells, squares marching up the diagonal.
SupportFamily bilinear_family() {
    return SupportFamily(2, {unit_square(), unit_square(), unit_square()});
}
Lifting staircase_lifting(const SupportFamily& A) {
    Lifting w = Lifting::zero(A);
    const long long scale[3] = {0, 1, 3};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& a = A.supports[i][k];
            w.values[i][k] = Rat(scale[i] * (a[0] + a[1]));
        }
    return w;
}

}  // namespace

TEST_CASE("cayley embedding cardinality and dimensions", "[subdivision]") {
    SupportFamily A(1, {{{0}, {1}, {2}}, {{0}, {2}}});
    auto C = cayley_embed(A);
    REQUIRE(C.points.size() == 5);
    for (const auto& p : C.points) REQUIRE(p.size() == 2);
    // ordering is (i, lex): last point is (2, 1)
    REQUIRE(C.points.front() == LPoint{0, 0});
    REQUIRE(C.points.back() == LPoint{2, 1});
}

TEST_CASE("cayley embedding of the bicubic supports has 27 points in Z^4", "[subdivision]") {
    std::vector<LPoint> a0{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}};
    std::vector<LPoint> a1{{0, 0}, {0, 1}, {1, 0}, {2, 0}, {0, 3}, {3, 0}};
    std::vector<LPoint> a2{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {1, 2},
                           {2, 1}, {1, 3}, {2, 2}, {3, 1}, {2, 3}, {3, 2}, {3, 3}};
    SupportFamily A(2, {a0, a1, a2});
    auto C = cayley_embed(A);
    REQUIRE(C.points.size() == 27);
    for (const auto& p : C.points) REQUIRE(p.size() == 4);
}

TEST_CASE("cayley embedding of a single support is the identity", "[subdivision]") {
    SupportFamily A(2, {unit_square()});
    auto C = cayley_embed(A);
    REQUIRE(C.points.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) REQUIRE(C.points[k] == A.supports[0][k]);
}

TEST_CASE("zero lifting yields the trivial subdivision", "[subdivision]") {
    std::vector<QPoint> pts{{Rat(0)}, {Rat(1)}, {Rat(2)}};
    auto cells = regular_subdivision(pts, {Rat(0), Rat(0), Rat(0)});
    REQUIRE(cells.size() == 1);
    REQUIRE(cells[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("three collinear points with a lifted middle point", "[subdivision]") {
    std::vector<QPoint> pts{{Rat(0)}, {Rat(1)}, {Rat(2)}};
    std::vector<Rat> lift{Rat(0), Rat(1), Rat(0)};
    // seen from below the middle point is hidden; from above it splits
    auto lower = regular_subdivision(pts, lift, HullSide::lower);
    REQUIRE(lower.size() == 1);
    REQUIRE(lower[0] == std::vector<int>{0, 2});
    auto upper = regular_subdivision(pts, lift, HullSide::upper);
    REQUIRE(upper == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    // a dipped middle point splits the lower hull into two segments
    auto vee = regular_subdivision(pts, {Rat(1), Rat(0), Rat(1)}, HullSide::lower);
    REQUIRE(vee == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
}

TEST_CASE("two generically lifted segments give two mixed cells", "[subdivision]") {
    SupportFamily A(1, {{{0}, {1}}, {{0}, {1}}});
    Lifting w = Lifting::zero(A);
    w.values[1][1] = Rat(3);
    auto S = mixed_subdivision(A, w);
    REQUIRE(S.tight);
    REQUIRE(S.cells.size() == 2);
    int mixed = 0;
    Rat volsum(0);
    for (const auto& c : S.cells) {
        if (c.mixed_index >= 0) {
            ++mixed;
            volsum += volume(c.cell);
        }
    }
    REQUIRE(mixed == 2);
    REQUIRE(volsum == Rat(2));
    // MV equals the i-mixed volumes for each i
    for (int i = 0; i < 2; ++i) {
        Rat vi(0);
        for (const auto& c : S.cells)
            if (c.mixed_index == i) vi += volume(c.cell);
        REQUIRE(vi == A.mixed_volume_excluding(i));
    }
}

TEST_CASE("bilinear staircase subdivision has nine tight cells", "[subdivision]") {
    auto A = bilinear_family();
    auto S = mixed_subdivision(A, staircase_lifting(A));
    REQUIRE(S.cells.size() == 9);
    REQUIRE(S.tight);
    REQUIRE_FALSE(S.triangulation);  // the three diagonal cells are squares

    int nonmixed = 0;
    std::map<int, Rat> mixed_vol;
    Rat total(0);
    for (const auto& c : S.cells) {
        REQUIRE(c.tight);
        Rat v = volume(c.cell);
        total += v;
        if (c.mixed_index < 0) ++nonmixed;
        else mixed_vol[c.mixed_index] += v;
    }
    REQUIRE(nonmixed == 3);
    for (int i = 0; i < 3; ++i) REQUIRE(mixed_vol[i] == Rat(2));
    // cell volumes cover the Minkowski sum
    REQUIRE(total == volume(A.minkowski_total()));
    // all nine lattice points of (Delta + (1/4,1/4)) land strictly inside cells
    int count = 0;
    for (long long x = 1; x <= 3; ++x)
        for (long long y = 1; y <= 3; ++y) {
            QPoint q{Rat(x) - Rat(1, 4), Rat(y) - Rat(1, 4)};
            if (S.locate_strict(q) >= 0) ++count;
        }
    REQUIRE(count == 9);
}

TEST_CASE("random generic liftings satisfy the mixed volume identity", "[subdivision]") {
    Rng rng(2024);
    int done = 0;
    while (done < 4) {
        int n = 2;
        std::vector<std::vector<LPoint>> sup(3);
        for (auto& s : sup) {
            int cnt = static_cast<int>(rng.uniform(2, 4));
            std::set<LPoint> uniq;
            while (static_cast<int>(uniq.size()) < cnt)
                uniq.insert({rng.uniform(0, 2), rng.uniform(0, 2)});
            s.assign(uniq.begin(), uniq.end());
        }
        SupportFamily A(n, sup);
        if (A.minkowski_total().affine_dim != n) continue;
        MixedSubdivision S;
        try {
            S = random_tight_subdivision(A, rng);
        } catch (const retry_exhausted_error&) {
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            Rat vi(0);
            for (const auto& c : S.cells)
                if (c.mixed_index == i) vi += volume(c.cell);
            REQUIRE(vi == A.mixed_volume_excluding(i));
        }
        // cell volumes tile the whole Minkowski sum
        Rat total(0);
        for (const auto& c : S.cells) total += volume(c.cell);
        REQUIRE(total == volume(A.minkowski_total()));
        ++done;
    }
}

TEST_CASE("refinement checks", "[subdivision]") {
    SupportFamily A(1, {{{0}, {1}}, {{0}, {1}}});
    Lifting rho = Lifting::zero(A);
    rho.values[0] = {Rat(1), Rat(0)};
    rho.values[1] = {Rat(0), Rat(3)};
    auto Srho = mixed_subdivision(A, rho);
    REQUIRE(Srho.cells.size() == 2);

    auto trivial = mixed_subdivision(A, Lifting::zero(A));
    REQUIRE(trivial.cells.size() == 1);

    // a subdivision refines itself; the trivial one is refined by anything
    REQUIRE(refine_check(Srho, Srho));
    REQUIRE(refine_check(trivial, Srho));
    REQUIRE(refine_check(trivial, trivial));
    REQUIRE_FALSE(refine_check(Srho, trivial));

    // incremental chain w^{<i} = (w_0, ..., w_{i-1}, 0)
    Lifting theta1 = Lifting::zero(A);
    theta1.values[0] = rho.values[0];
    auto Stheta1 = mixed_subdivision(A, theta1);
    REQUIRE(refine_check(trivial, Stheta1));
    REQUIRE(refine_check(Stheta1, Srho));
}

TEST_CASE("lifting value interpolates the cell's affine function", "[subdivision]") {
    SupportFamily A(1, {{{0}, {1}}, {{0}, {1}}});
    Lifting rho = Lifting::zero(A);
    rho.values[0] = {Rat(1), Rat(0)};
    rho.values[1] = {Rat(0), Rat(3)};
    auto S = mixed_subdivision(A, rho);
    REQUIRE(lifting_value_at(A, S, {Rat(1, 2)}) == Rat(1, 2));
    REQUIRE(lifting_value_at(A, S, {Rat(1)}) == Rat(0));
    REQUIRE(lifting_value_at(A, S, {Rat(2)}) == Rat(3));
}

TEST_CASE("a lone full-dimensional support forms one tight cell", "[subdivision]") {
    SupportFamily A(2, {unit_square()});
    auto S = mixed_subdivision(A, Lifting::zero(A));
    REQUIRE(S.cells.size() == 1);
    REQUIRE(S.tight);  // component dimension sum is 2 = n
    REQUIRE(S.cells[0].mixed_index == -1);
}
