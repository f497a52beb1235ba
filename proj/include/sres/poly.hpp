#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "numeric.hpp"

namespace sres {

// Lex-descending order on exponent vectors; begin() of the term map is the
// leading term.
struct LexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over a field K with a named variable set.
// Terms are kept in a fixed total order and never store zero coefficients,
// so equal polynomials are structurally equal.
template <typename K = Rat>
class Poly {
  public:
    using Terms = std::map<std::vector<int>, K, LexGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(const K& c, std::vector<std::string> vars = {}) {
        Poly p(std::move(vars));
        if (!field_traits<K>::is_zero(c)) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
        return p;
    }
    static Poly variable(const std::string& name, const std::vector<std::string>& vars,
                         const K& one) {
        Poly p(vars);
        std::vector<int> e(vars.size(), 0);
        e[p.var_index(name)] = 1;
        p.terms_[e] = one;
        return p;
    }
    static Poly monomial(const std::vector<int>& exp, const K& c,
                         const std::vector<std::string>& vars) {
        Poly p(vars);
        if (!field_traits<K>::is_zero(c)) p.terms_[exp] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        throw error("Poly: unknown variable " + name);
    }

    // Remaps this polynomial onto a variable universe that must contain all
    // variables of the current one.
    Poly aligned(const std::vector<std::string>& universe) const {
        if (universe == vars_) return *this;
        std::vector<int> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(universe.begin(), universe.end(), vars_[i]);
            if (it == universe.end()) throw error("Poly: variable " + vars_[i] + " missing from universe");
            where[i] = static_cast<int>(it - universe.begin());
        }
        Poly out(universe);
        for (const auto& [e, c] : terms_) {
            std::vector<int> ne(universe.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
            out.terms_[ne] = c;
        }
        return out;
    }

    static std::vector<std::string> merged_vars(const Poly& a, const Poly& b) {
        std::vector<std::string> u = a.vars_;
        for (const auto& v : b.vars_)
            if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
        return u;
    }

    Poly operator+(const Poly& o) const {
        auto u = merged_vars(*this, o);
        Poly a = aligned(u), b = o.aligned(u), out(u);
        out.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    Poly operator-(const Poly& o) const { return *this + o.negated(); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly negated() const {
        Poly out(vars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    Poly operator*(const Poly& o) const {
        auto u = merged_vars(*this, o);
        Poly a = aligned(u), b = o.aligned(u), out(u);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    Poly scaled(const K& c) const {
        Poly out(vars_);
        if (field_traits<K>::is_zero(c)) return out;
        for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
        return out;
    }
    bool operator==(const Poly& o) const {
        auto u = merged_vars(*this, o);
        return aligned(u).terms_ == o.aligned(u).terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const std::vector<int>& e, const K& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!field_traits<K>::is_zero(c)) terms_[e] = c;
        } else {
            it->second += c;
            if (field_traits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // Full evaluation; `values` must cover every variable.
    K eval(const std::vector<K>& values, const K& like) const {
        K acc = field_traits<K>::zero(like);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= values[i];
            acc += t;
        }
        return acc;
    }

    // Substitutes scalars for a subset of variables, keeping the rest symbolic.
    Poly eval_partial(const std::map<std::string, K>& values) const {
        std::vector<std::string> keep;
        for (const auto& v : vars_)
            if (!values.count(v)) keep.push_back(v);
        Poly out(keep);
        for (const auto& [e, c] : terms_) {
            K coeff = c;
            std::vector<int> ne;
            ne.reserve(keep.size());
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                auto it = values.find(vars_[i]);
                if (it != values.end()) {
                    for (int k = 0; k < e[i]; ++k) coeff *= it->second;
                } else {
                    ne.push_back(e[i]);
                }
            }
            out.add_term(ne, coeff);
        }
        return out;
    }

    // Replaces each variable v by v * t^{weight(v)}; used to form F_t from F.
    Poly twisted(const std::string& tvar, const std::vector<long long>& weights) const {
        std::vector<std::string> u = vars_;
        int ti;
        auto it = std::find(u.begin(), u.end(), tvar);
        if (it == u.end()) {
            u.push_back(tvar);
            ti = static_cast<int>(u.size()) - 1;
        } else {
            ti = static_cast<int>(it - u.begin());
        }
        Poly out(u);
        for (const auto& [e, c] : terms_) {
            std::vector<int> ne(u.size(), 0);
            long long td = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                ne[i] = e[i];
                td += static_cast<long long>(e[i]) * weights[i];
            }
            if (td < 0) throw error("Poly::twisted: negative t-degree");
            ne[ti] += static_cast<int>(td);
            out.add_term(ne, c);
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << vars_[i];
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

  private:
    std::vector<std::string> vars_;
    Terms terms_;
};

using MultiPoly = Poly<Rat>;

template <typename K>
struct field_traits<Poly<K>> {
    static Poly<K> zero(const Poly<K>& like) { return Poly<K>(like.vars()); }
    static Poly<K> one(const Poly<K>& like) {
        K k_like = like.is_zero() ? K{} : like.terms().begin()->second;
        return Poly<K>::constant(field_traits<K>::one(k_like), like.vars());
    }
    static bool is_zero(const Poly<K>& x) { return x.is_zero(); }
};

// Exact division: returns q with q*den == num, or throws not_divisible_error.
template <typename K>
Poly<K> exact_divide(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw error("exact_divide: zero divisor");
    auto u = Poly<K>::merged_vars(num, den);
    Poly<K> r = num.aligned(u), d = den.aligned(u), q(u);
    const auto& dlead = *d.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        std::vector<int> e(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw not_divisible_error("exact_divide: remainder is nonzero");
        }
        K c = rlead.second / dlead.second;
        Poly<K> t = Poly<K>::monomial(e, c, u);
        q = q + t;
        r = r - t * d;
        // The leading term strictly decreases, so this terminates; a failed
        // exponent subtraction above is the non-divisibility signal.
    }
    return q;
}

// Sum of the terms of minimal degree in `tvar`, with that variable dropped.
template <typename K>
Poly<K> initial_form(const Poly<K>& f, const std::string& tvar) {
    if (f.is_zero()) return f;
    int ti = f.var_index(tvar);
    int mindeg = -1;
    for (const auto& [e, c] : f.terms())
        if (mindeg < 0 || e[ti] < mindeg) mindeg = e[ti];
    std::vector<std::string> keep;
    for (const auto& v : f.vars())
        if (v != tvar) keep.push_back(v);
    Poly<K> out(keep);
    for (const auto& [e, c] : f.terms()) {
        if (e[ti] != mindeg) continue;
        std::vector<int> ne;
        ne.reserve(keep.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != ti) ne.push_back(e[i]);
        out.add_term(ne, c);
    }
    return out;
}

// Scales a rational-coefficient polynomial to integer primitive form with a
// positive leading coefficient.
inline MultiPoly normalize_primitive(const MultiPoly& f) {
    if (f.is_zero()) return f;
    Int l(1), g(0);
    for (const auto& [e, c] : f.terms()) l = lcm(l, den(c));
    for (const auto& [e, c] : f.terms()) g = gcd(g, num(c) * (l / den(c)));
    Rat scale(l, g);
    if (f.terms().begin()->second < 0) scale = -scale;
    return f.scaled(scale);
}

}  // namespace sres
