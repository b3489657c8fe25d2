#pragma once

#include <map>

#include "gwb/poly.hpp"

namespace gwb {

// Sparse Laurent polynomial over K: exponents range over Z. No explicit zero
// coefficients stored.
template <class K>
class LaurentPoly {
public:
    using Map = std::map<long long, K>;

    LaurentPoly() = default;
    LaurentPoly(long long v) {  // NOLINT: scalar lift
        K k = k_int<K>(v);
        if (!(k == K(0))) c_[0] = k;
    }
    explicit LaurentPoly(const K& v) {
        if (!(v == K(0))) c_[0] = v;
    }
    explicit LaurentPoly(const Poly<K>& p, long long shift = 0) {
        for (const auto& [e, v] : p.coeffs()) c_[e + shift] = v;
    }

    static LaurentPoly monomial(const K& v, long long e) {
        LaurentPoly r;
        if (!(v == K(0))) r.c_[e] = v;
        return r;
    }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long top_exp() const {
        if (c_.empty()) throw MathError("exponent range of zero");
        return c_.rbegin()->first;
    }
    long long low_exp() const {
        if (c_.empty()) throw MathError("exponent range of zero");
        return c_.begin()->first;
    }
    bool has_negative_exp() const { return !c_.empty() && c_.begin()->first < 0; }
    // Single term c*u^k, the units of K[u, u^-1].
    bool is_single_term() const { return c_.size() == 1; }

    K coeff(long long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? K(0) : it->second;
    }
    void set_coeff(long long e, const K& v) {
        if (v == K(0))
            c_.erase(e);
        else
            c_[e] = v;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, K(0) - v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_[e] = K(0) - v;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const K& s) const {
        LaurentPoly r;
        if (s == K(0)) return r;
        for (const auto& [e, v] : c_) r.c_[e] = v * s;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Restriction to the polynomial subring; zero or nonnegative exponents only.
    Poly<K> as_poly() const {
        if (has_negative_exp()) throw MathError("Laurent element has negative exponents");
        Poly<K> r;
        for (const auto& [e, v] : c_) r.set_coeff(e, v);
        return r;
    }

private:
    void add_term(long long e, const K& v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!(v == K(0))) c_[e] = v;
        } else {
            it->second = it->second + v;
            if (it->second == K(0)) c_.erase(it);
        }
    }

    Map c_;
};

// Unit-core split f = u^k * core with core(0) != 0.
template <class K>
struct LaurentNormalForm {
    long long unit_exp = 0;
    Poly<K> core;
};

template <class K>
LaurentNormalForm<K> laurent_normalize(const LaurentPoly<K>& f) {
    if (f.is_zero()) throw MathError("cannot normalize the zero element");
    long long k = f.low_exp();
    LaurentNormalForm<K> out;
    out.unit_exp = k;
    for (const auto& [e, v] : f.coeffs()) out.core.set_coeff(e - k, v);
    return out;
}

// Core of a Laurent element, dropping the unit u^k.
template <class K>
Poly<K> laurent_core(const LaurentPoly<K>& f) {
    return laurent_normalize(f).core;
}

// Strip a polynomial's u^k factor (the Laurent-ring unit part of a Poly).
template <class K>
Poly<K> poly_core(const Poly<K>& f) {
    if (f.is_zero()) throw MathError("cannot normalize the zero element");
    long long k = f.low_exp();
    if (k == 0) return f;
    Poly<K> r;
    for (const auto& [e, v] : f.coeffs()) r.set_coeff(e - k, v);
    return r;
}

}  // namespace gwb
