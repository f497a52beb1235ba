#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Base class for every failure the library reports by exception.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct symbolic_too_large_error : error { using error::error; };
struct not_divisible_error : error { using error::error; };
struct not_tight_error : error { using error::error; };
struct retry_exhausted_error : error { using error::error; };
struct essential_proper_error : error { using error::error; };
struct too_many_supports_error : error { using error::error; };
struct degenerate_input_error : error { using error::error; };
struct unbounded_error : error { using error::error; };
struct no_valid_chain_error : error { using error::error; };
struct singular_system_error : error { using error::error; };
struct corank_error : error { using error::error; };
struct degenerate_sample_error : error { using error::error; };

// Schema violations carry a JSON-pointer-style path to the offending field.
struct schema_error : error {
    std::string path;
    schema_error(const std::string& p, const std::string& what)
        : error(p + ": " + what), path(p) {}
};

constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

// Residue modulo a runtime prime p > 2^30.  Each value carries its modulus so
// that mixed-prime arithmetic is caught instead of silently corrupting data.
class Fp {
  public:
    Fp() : v_(0), p_(kDefaultPrime) {}
    explicit Fp(std::uint64_t p) : v_(0), p_(p) {}
    Fp(long long v, std::uint64_t p) : p_(p) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }
    Fp(const Int& v, std::uint64_t p) : p_(p) {
        Int r = v % Int(p);
        if (r < 0) r += Int(p);
        v_ = r.convert_to<std::uint64_t>();
    }
    static Fp from_rat(const Rat& q, std::uint64_t p) {
        Fp n(num(q), p), d(den(q), p);
        return n / d;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(s, p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw((v_ * o.v_) % p_, p_);  // p < 2^32 keeps the product in range
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inverse() const {
        if (v_ == 0) throw error("Fp: division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }
    Fp pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Fp b = *this, acc = raw(1 % p_, p_);
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

  private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x(p);
        x.v_ = v;
        return x;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw error("Fp: mixed moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

// Uniform access to 0/1 of a field given a sample element; Fp needs the
// modulus of an existing value, Rat does not.
template <typename K>
struct field_traits;

template <>
struct field_traits<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
};

template <>
struct field_traits<Fp> {
    static Fp zero(const Fp& like) { return Fp(0, like.prime()); }
    static Fp one(const Fp& like) { return Fp(1, like.prime()); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
};

// Deterministic RNG used everywhere randomness is called for; a fixed seed
// pins the whole pipeline.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // uniform integer in [lo, hi]
    long long uniform(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(eng_);
    }
    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

// Rational reconstruction: the unique n/d with |n|, d <= floor(sqrt(p/2))
// congruent to v mod p, if it exists.
inline bool rational_reconstruct(std::uint64_t v, std::uint64_t p, Rat& out) {
    Int bound = boost::multiprecision::sqrt(Int(p) / 2);
    Int r0 = Int(p), r1 = Int(v);
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (t1 == 0 || boost::multiprecision::abs(t1) > bound) return false;
    if (boost::multiprecision::gcd(r1, boost::multiprecision::abs(t1)) != 1) return false;
    out = Rat(r1, t1);
    return true;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace sres
