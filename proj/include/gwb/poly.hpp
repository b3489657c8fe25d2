#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gwb/numeric.hpp"

namespace gwb {

// Sparse univariate polynomial over a field K. Exponents >= 0; no explicit
// zero coefficients are stored. degree() of the zero polynomial is -1.
template <class K>
class Poly {
public:
    using Map = std::map<long long, K>;

    Poly() = default;
    Poly(long long v) {  // NOLINT: implicit constant lift is intended
        K k = k_int<K>(v);
        if (!(k == K(0))) c_[0] = k;
    }
    explicit Poly(const K& v) {
        if (!(v == K(0))) c_[0] = v;
    }

    static Poly monomial(const K& v, long long e) {
        if (e < 0) throw MathError("negative exponent in polynomial");
        Poly r;
        if (!(v == K(0))) r.c_[e] = v;
        return r;
    }
    static Poly var() { return monomial(K(1), 1); }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || c_.rbegin()->first == 0; }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == K(1); }
    long long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    long long low_exp() const { return c_.empty() ? 0 : c_.begin()->first; }

    K coeff(long long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? K(0) : it->second;
    }
    const K& lc() const {
        if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
        return c_.rbegin()->second;
    }
    K constant_term() const { return coeff(0); }

    void set_coeff(long long e, const K& v) {
        if (e < 0) throw MathError("negative exponent in polynomial");
        if (v == K(0))
            c_.erase(e);
        else
            c_[e] = v;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, K(0) - v);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [e, v] : c_) r.c_[e] = K(0) - v;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        Poly r;
        if (s == K(0)) return r;
        for (const auto& [e, v] : c_) {
            K w = v * s;
            if (!(w == K(0))) r.c_[e] = w;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K acc(0);
        long long prev = -1;
        // Horner over descending exponents with gap powers.
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (prev >= 0)
                for (long long k = 0; k < prev - it->first; ++k) acc = acc * x;
            acc = acc + it->second;
            prev = it->first;
        }
        if (prev > 0)
            for (long long k = 0; k < prev; ++k) acc = acc * x;
        return acc;
    }

    Poly derivative() const {
        Poly r;
        for (const auto& [e, v] : c_)
            if (e > 0) r.add_term(e - 1, v * k_int<K>(e));
        return r;
    }

    // f(u + m). Exact binomial expansion via Horner.
    Poly compose_shift(long long m) const {
        if (m == 0 || is_zero()) return *this;
        Poly shifted_var = var() + Poly(m);
        Poly acc;
        long long d = degree();
        for (long long e = d; e >= 0; --e) {
            acc = acc * shifted_var;
            K v = coeff(e);
            if (!(v == K(0))) acc += Poly(v);
        }
        return acc;
    }

    // f(s * u): coefficient of u^k multiplied by s^k. s must be nonzero when
    // negative powers would be needed; here k >= 0 so any s works.
    Poly scale_arg(const K& s) const {
        Poly r;
        K sk(1);
        long long prev = 0;
        for (const auto& [e, v] : c_) {
            for (long long k = prev; k < e; ++k) sk = sk * s;
            prev = e;
            K w = v * sk;
            if (!(w == K(0))) r.c_[e] = w;
        }
        return r;
    }

    // u^deg(f) * f(1/u). Bijection on polynomials with nonzero constant term.
    Poly reversed() const {
        Poly r;
        long long d = degree();
        for (const auto& [e, v] : c_) r.c_[d - e] = v;
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / lc());
    }

    Poly pow(long long n) const {
        if (n < 0) throw MathError("negative polynomial power");
        Poly acc(1);
        Poly base = *this;
        while (n > 0) {
            if (n & 1) acc *= base;
            if (n >>= 1) base *= base;
        }
        return acc;
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

// Quotient and remainder over a field: a = q*b + r, deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    Poly<K> q, r = a;
    long long db = b.degree();
    const K& lb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        long long e = r.degree() - db;
        K c = r.lc() / lb;
        Poly<K> t = Poly<K>::monomial(c, e);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <class K>
bool poly_divides(const Poly<K>& b, const Poly<K>& a) {
    if (b.is_zero()) return a.is_zero();
    return poly_divmod(a, b).second.is_zero();
}

template <class K>
Poly<K> poly_divexact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

// Monic gcd. gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    Poly<K> g = poly_gcd(a, b);
    return poly_divexact(a * b, g).monic();
}

// Exact multiplicity of divisor d in f (largest m with d^m | f). f != 0,
// d nonconstant.
template <class K>
long long poly_multiplicity(Poly<K> f, const Poly<K>& d) {
    if (f.is_zero()) throw MathError("multiplicity in zero polynomial");
    if (d.is_constant()) throw MathError("multiplicity of constant divisor");
    long long m = 0;
    while (true) {
        auto [q, r] = poly_divmod(f, d);
        if (!r.is_zero()) return m;
        ++m;
        f = std::move(q);
    }
}

// Yun squarefree decomposition: f = lc * prod s_i^i with s_i monic,
// squarefree, pairwise coprime. Returns pairs (s_i, i) for nonconstant s_i.
template <class K>
std::vector<std::pair<Poly<K>, long long>> squarefree_decomposition(const Poly<K>& f) {
    if (f.is_zero()) throw MathError("squarefree decomposition of zero");
    std::vector<std::pair<Poly<K>, long long>> out;
    Poly<K> g = f.monic();
    if (g.is_constant()) return out;
    Poly<K> d = g.derivative();
    Poly<K> a = poly_gcd(g, d);
    Poly<K> b = poly_divexact(g, a);
    Poly<K> c = poly_divexact(d, a) - b.derivative();
    long long i = 1;
    while (!b.is_constant()) {
        Poly<K> s = poly_gcd(b, c);
        if (!s.is_constant()) out.emplace_back(s, i);
        b = poly_divexact(b, s);
        c = poly_divexact(c, s) - b.derivative();
        ++i;
    }
    return out;
}

// Cauchy bound: every complex root z of f satisfies |z| < 1 + max_i |a_i/a_d|.
inline Rat cauchy_root_bound(const Poly<Rat>& f) {
    if (f.is_zero()) throw MathError("root bound of zero polynomial");
    Rat best(0);
    long long d = f.degree();
    const Rat& lead = f.lc();
    for (const auto& [e, v] : f.coeffs()) {
        if (e == d) continue;
        Rat t = rat_abs(v / lead);
        if (t > best) best = t;
    }
    return best + 1;
}

// Fujiwara bound: |z| <= 2 max_k |a_{d-k}/a_d|^{1/k}. Far tighter than Cauchy
// when f splits into small linear factors, where coefficient ratios explode.
inline Rat fujiwara_root_bound(const Poly<Rat>& f) {
    if (f.is_zero()) throw MathError("root bound of zero polynomial");
    Int best(0);
    long long d = f.degree();
    const Rat& lead = f.lc();
    for (const auto& [e, v] : f.coeffs()) {
        if (e == d) continue;
        Rat t = rat_abs(v / lead);
        // Sound integer ceiling of t^{1/k}: floor((ceil t)^{1/k}) + 1.
        Int c = t.get_num() / t.get_den() + 1;
        Int r;
        mpz_root(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(d - e));
        r += 1;
        if (r > best) best = r;
    }
    return Rat(2) * Rat(best);
}

}  // namespace gwb
