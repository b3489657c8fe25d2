#pragma once

#include <map>

#include "gwb/sigma.hpp"

namespace gwb {

// Element of the skew-Laurent ring T[t, t^-1; sigma]: finitely many degrees,
// each carrying a coefficient in T. Multiplication twists by t*a = sigma(a)*t.
template <class K>
class SkewElement {
public:
    SkewElement() = default;
    explicit SkewElement(const LaurentPoly<K>& c) {
        if (!c.is_zero()) t_.emplace(0, c);
    }

    static SkewElement monomial(const LaurentPoly<K>& c, long long deg) {
        SkewElement r;
        if (!c.is_zero()) r.t_.emplace(deg, c);
        return r;
    }
    static SkewElement t_power(long long deg) { return monomial(LaurentPoly<K>(1), deg); }

    bool is_zero() const { return t_.empty(); }
    const std::map<long long, LaurentPoly<K>>& terms() const { return t_; }

    LaurentPoly<K> coeff(long long deg) const {
        auto it = t_.find(deg);
        return it == t_.end() ? LaurentPoly<K>() : it->second;
    }
    void set_coeff(long long deg, const LaurentPoly<K>& c) {
        if (c.is_zero())
            t_.erase(deg);
        else
            t_[deg] = c;
    }

    SkewElement operator+(const SkewElement& o) const {
        SkewElement r = *this;
        for (const auto& [d, c] : o.t_) r.set_coeff(d, r.coeff(d) + c);
        return r;
    }
    SkewElement operator-() const {
        SkewElement r;
        for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
        return r;
    }
    SkewElement operator-(const SkewElement& o) const { return *this + (-o); }
    bool operator==(const SkewElement& o) const { return t_ == o.t_; }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

private:
    std::map<long long, LaurentPoly<K>> t_;
};

// (f t^m)(g t^n) = f sigma^m(g) t^{m+n}, extended bilinearly.
template <class K>
SkewElement<K> skew_mul(const SigmaLine<K>& line, const SkewElement<K>& a, const SkewElement<K>& b) {
    SkewElement<K> r;
    for (const auto& [m, f] : a.terms())
        for (const auto& [n, g] : b.terms()) {
            LaurentPoly<K> c = f * apply_sigma(line, g, m);
            r.set_coeff(m + n, r.coeff(m + n) + c);
        }
    return r;
}

// Anti-automorphism psi: f t^n -> sigma^{-n}(f) t^{-n}. Involutive and
// product-reversing: psi(a b) = psi(b) psi(a).
template <class K>
SkewElement<K> apply_psi(const SigmaLine<K>& line, const SkewElement<K>& a) {
    SkewElement<K> r;
    for (const auto& [n, f] : a.terms()) r.set_coeff(-n, apply_sigma(line, f, -n));
    return r;
}

}  // namespace gwb
