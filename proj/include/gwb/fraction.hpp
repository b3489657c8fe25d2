#pragma once

#include <type_traits>
#include <utility>

#include "gwb/poly.hpp"

namespace gwb {

// Reduced fraction of polynomials over the field K: num/den with
// gcd(num, den) = 1 and den monic. Canonical, so operator== is structural.
// PolyFraction<Rat> in the variable p is the scalar field Q(p).
template <class K>
class PolyFraction {
public:
    PolyFraction() : num_(), den_(1) {}
    PolyFraction(long long v) : num_(v), den_(1) {}  // NOLINT: scalar lift
    explicit PolyFraction(Poly<K> n) : num_(std::move(n)), den_(1) {}
    PolyFraction(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static PolyFraction var() { return PolyFraction(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Constant value as an element of K; only for constant fractions.
    K constant_value() const {
        if (!is_constant()) throw MathError("fraction is not a constant");
        return num_.constant_term() / den_.constant_term();
    }

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
        if (b.is_zero()) throw MathError("division by zero fraction");
        return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    PolyFraction operator-() const {
        PolyFraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    PolyFraction& operator+=(const PolyFraction& o) { return *this = *this + o; }
    PolyFraction& operator-=(const PolyFraction& o) { return *this = *this - o; }
    PolyFraction& operator*=(const PolyFraction& o) { return *this = *this * o; }
    PolyFraction& operator/=(const PolyFraction& o) { return *this = *this / o; }

    PolyFraction inverse() const {
        if (is_zero()) throw MathError("inverse of zero fraction");
        return PolyFraction(den_, num_);
    }

    bool operator==(const PolyFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const PolyFraction& o) const { return !(*this == o); }

private:
    void reduce() {
        if (den_.is_zero()) throw MathError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(1);
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        K l = den_.lc();
        if (!(l == K(1))) {
            num_ = num_.scaled(K(1) / l);
            den_ = den_.scaled(K(1) / l);
        }
    }

    Poly<K> num_, den_;
};

// The rational function field Q(p).
using RatFunc = PolyFraction<Rat>;

template <class K>
struct KTraits<PolyFraction<K>> {
    static PolyFraction<K> of_int(long long v) { return PolyFraction<K>(Poly<K>(v)); }
};

// p-adic style data for Q(p) elements: lowest p-exponent and its coefficient.
// val(x) = low(num) - low(den); lead(x) = leading low coefficient ratio.
inline long long ratfunc_val(const RatFunc& x) {
    if (x.is_zero()) throw MathError("valuation of zero");
    return x.num().low_exp() - x.den().low_exp();
}
inline Rat ratfunc_lead(const RatFunc& x) {
    if (x.is_zero()) throw MathError("lead of zero");
    return x.num().coeff(x.num().low_exp()) / x.den().coeff(x.den().low_exp());
}

// x = c * p^k exactly? Returns (c, k) when both num and den are monomials.
inline std::optional<std::pair<Rat, long long>> ratfunc_as_monomial(const RatFunc& x) {
    if (x.is_zero()) return std::nullopt;
    if (x.num().coeffs().size() != 1 || x.den().coeffs().size() != 1) return std::nullopt;
    return std::make_pair(ratfunc_lead(x), ratfunc_val(x));
}

template <class K>
PolyFraction<K> frac_pow(const PolyFraction<K>& x, long long e) {
    if (e == 0) return PolyFraction<K>(1);
    PolyFraction<K> base = e < 0 ? x.inverse() : x;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    PolyFraction<K> acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Generic field power usable for both Rat and PolyFraction scalars.
template <class K>
K field_pow(const K& x, long long e) {
    if constexpr (std::is_same_v<K, Rat>) {
        return rat_pow(x, e);
    } else {
        return frac_pow(x, e);
    }
}

}  // namespace gwb
