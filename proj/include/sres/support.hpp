#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "numeric.hpp"

namespace sres {

// Coefficient attached to a support point: either a symbolic marker or a
// rational value.
struct Coeff {
    bool symbolic = true;
    Rat value = 0;
    static Coeff sym() { return Coeff{true, Rat(0)}; }
    static Coeff val(const Rat& v) { return Coeff{false, v}; }
};

// The tuple A = (A_0,...,A_n) of finite lattice point sets with optional
// coefficient assignments.  Points are kept lex-sorted within each support;
// that order fixes variable names and resultant-polytope coordinates.
struct SupportFamily {
    int n = 0;                                   // ambient lattice rank
    std::vector<std::vector<LPoint>> supports;   // usually n+1 of them
    std::vector<std::vector<Coeff>> coeffs;      // parallel to supports

    SupportFamily() = default;
    SupportFamily(int ambient, std::vector<std::vector<LPoint>> sup)
        : n(ambient), supports(std::move(sup)) {
        coeffs.resize(supports.size());
        for (std::size_t i = 0; i < supports.size(); ++i)
            coeffs[i].assign(supports[i].size(), Coeff::sym());
        canonicalize();
    }

    void canonicalize() {
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (supports[i].empty()) throw error("SupportFamily: empty support");
            std::vector<std::size_t> order(supports[i].size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return supports[i][a] < supports[i][b];
            });
            std::vector<LPoint> sp;
            std::vector<Coeff> cf;
            for (auto k : order) {
                if (!sp.empty() && sp.back() == supports[i][k])
                    throw error("SupportFamily: duplicate point in support");
                sp.push_back(supports[i][k]);
                cf.push_back(coeffs[i][k]);
            }
            supports[i] = std::move(sp);
            coeffs[i] = std::move(cf);
        }
    }

    std::size_t count() const { return supports.size(); }
    std::size_t total_points() const {
        std::size_t t = 0;
        for (const auto& s : supports) t += s.size();
        return t;
    }

    // index of point k of support i in the flattened (i, lex) coordinate order
    std::size_t flat_index(std::size_t i, std::size_t k) const {
        std::size_t off = 0;
        for (std::size_t j = 0; j < i; ++j) off += supports[j].size();
        return off + k;
    }
    std::pair<std::size_t, std::size_t> unflatten(std::size_t flat) const {
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (flat < supports[i].size()) return {i, flat};
            flat -= supports[i].size();
        }
        throw error("SupportFamily: flat index out of range");
    }

    std::string var_name(std::size_t i, std::size_t k) const {
        return "u" + std::to_string(i) + "_" + std::to_string(k);
    }
    std::vector<std::string> all_vars() const {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < supports.size(); ++i)
            for (std::size_t k = 0; k < supports[i].size(); ++k) v.push_back(var_name(i, k));
        return v;
    }

    int point_index(std::size_t i, const LPoint& a) const {
        const auto& s = supports[i];
        auto it = std::lower_bound(s.begin(), s.end(), a);
        if (it == s.end() || *it != a) return -1;
        return static_cast<int>(it - s.begin());
    }

    Polytope newton_polytope(std::size_t i, bool with_triangulation = true) const {
        return convex_hull_lattice(supports[i], with_triangulation);
    }
    // Minkowski sum of all Newton polytopes.
    Polytope minkowski_total(bool with_triangulation = true) const {
        Polytope P = newton_polytope(0, with_triangulation);
        for (std::size_t i = 1; i < supports.size(); ++i)
            P = minkowski_sum(P, newton_polytope(i, with_triangulation), with_triangulation);
        return P;
    }
    // Minkowski sum of all Newton polytopes except the i-th.
    Rat mixed_volume_excluding(std::size_t skip) const {
        std::vector<Polytope> polys;
        for (std::size_t i = 0; i < supports.size(); ++i)
            if (i != skip) polys.push_back(newton_polytope(i));
        return mixed_volume(polys);
    }

    bool fully_specialized() const {
        for (const auto& ci : coeffs)
            for (const auto& c : ci)
                if (c.symbolic) return false;
        return true;
    }
    std::vector<std::size_t> symbolic_flat_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < supports.size(); ++i)
            for (std::size_t k = 0; k < supports[i].size(); ++k)
                if (coeffs[i][k].symbolic) out.push_back(flat_index(i, k));
        return out;
    }
};

}  // namespace sres
