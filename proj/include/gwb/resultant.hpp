#pragma once

#include <type_traits>

#include "gwb/fraction.hpp"
#include "gwb/poly.hpp"

namespace gwb {

// --- exact division in the coefficient domain D -----------------------------
// D = Rat (trivially exact) or D = Poly<Rat> (Q[p], asserts exactness).

inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }

template <class K>
Poly<K> ring_divexact(const Poly<K>& a, const Poly<K>& b) {
    return poly_divexact(a, b);
}

template <class D>
D ring_pow(const D& x, long long n) {
    if (n < 0) throw MathError("negative ring power");
    D acc = KTraits<D>::of_int(1);
    D base = x;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

namespace detail {

template <class D>
bool ring_is_zero(const D& x) {
    if constexpr (std::is_same_v<D, Rat>)
        return x == 0;
    else
        return x.is_zero();
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced by B. All
// coefficient arithmetic stays in D.
template <class D>
Poly<D> pseudo_rem(Poly<D> A, const Poly<D>& B) {
    long long db = B.degree();
    const D lb = B.lc();
    long long steps = A.degree() - db + 1;
    for (long long s = 0; s < steps; ++s) {
        if (A.is_zero() || A.degree() < db) {
            // Degree dropped early: keep the scaling exact.
            A = A.scaled(lb);
            continue;
        }
        D la = A.lc();
        long long sh = A.degree() - db;
        Poly<D> scaled = A.scaled(lb);
        Poly<D> sub = (B * Poly<D>::monomial(la, sh));
        A = scaled - sub;
    }
    return A;
}

// Divide every coefficient by d, exactly.
template <class D>
Poly<D> coeff_divexact(const Poly<D>& a, const D& d) {
    Poly<D> r;
    for (const auto& [e, v] : a.coeffs()) r.set_coeff(e, ring_divexact(v, d));
    return r;
}

// Subresultant PRS resultant over the integral domain D
// (Cohen, A Course in Computational Algebraic Number Theory, Alg. 3.3.7,
// without the content extraction step; all interior divisions are exact).
template <class D>
D subresultant_resultant(Poly<D> A, Poly<D> B) {
    const D one = KTraits<D>::of_int(1);
    if (A.is_zero() || B.is_zero()) throw MathError("resultant of zero polynomial");
    long long da = A.degree(), db = B.degree();
    if (da == 0 && db == 0) return one;
    if (db == 0) return ring_pow(B.lc(), da);
    if (da == 0) return ring_pow(A.lc(), db);
    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da % 2 != 0) && (db % 2 != 0)) sign = -sign;
    }
    D g = one, h = one;
    while (true) {
        long long dA = A.degree(), dB = B.degree();
        long long delta = dA - dB;
        if ((dA % 2 != 0) && (dB % 2 != 0)) sign = -sign;
        Poly<D> R = pseudo_rem(A, B);
        A = B;
        D divisor = g * ring_pow(h, delta);
        B = coeff_divexact(R, divisor);
        g = A.lc();
        if (delta > 0) h = ring_divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
        if (B.is_zero()) return KTraits<D>::of_int(0);
        if (B.degree() == 0) break;
    }
    long long dA = A.degree();
    D res = ring_divexact(ring_pow(B.lc(), dA), ring_pow(h, dA - 1));
    if (sign < 0) res = KTraits<D>::of_int(0) - res;
    return res;
}

}  // namespace detail

// Res(a, b) over Q. Coefficients are cleared to integers first so the PRS is
// genuinely fraction-free, then the scaling is undone exactly.
inline Rat resultant(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.is_zero() || b.is_zero()) throw MathError("resultant of zero polynomial");
    Int la(1), lb(1);
    for (const auto& [e, v] : a.coeffs()) mpz_lcm(la.get_mpz_t(), la.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [e, v] : b.coeffs()) mpz_lcm(lb.get_mpz_t(), lb.get_mpz_t(), v.get_den().get_mpz_t());
    Poly<Rat> A = a.scaled(Rat(la)), B = b.scaled(Rat(lb));
    Rat res = detail::subresultant_resultant(A, B);
    Rat unscale = rat_pow(Rat(la), b.degree()) * rat_pow(Rat(lb), a.degree());
    return res / unscale;
}

// Res(a, b) over Q(p). Denominators in p are cleared so the PRS runs over
// Q[p]; the result is scaled back as an exact rational function.
inline RatFunc resultant(const Poly<RatFunc>& a, const Poly<RatFunc>& b) {
    if (a.is_zero() || b.is_zero()) throw MathError("resultant of zero polynomial");
    using PP = Poly<Rat>;
    auto den_lcm = [](const Poly<RatFunc>& f) {
        PP l(1);
        for (const auto& [e, v] : f.coeffs()) l = poly_lcm(l, v.den());
        return l;
    };
    PP la = den_lcm(a), lb = den_lcm(b);
    auto lift = [](const Poly<RatFunc>& f, const PP& l) {
        Poly<PP> out;
        for (const auto& [e, v] : f.coeffs()) {
            RatFunc cleared = v * RatFunc(l);
            if (!cleared.is_polynomial()) throw MathError("denominator clearing failed");
            out.set_coeff(e, cleared.num());
        }
        return out;
    };
    Poly<PP> A = lift(a, la), B = lift(b, lb);
    PP res = detail::subresultant_resultant(A, B);
    RatFunc unscale = frac_pow(RatFunc(la), b.degree()) * frac_pow(RatFunc(lb), a.degree());
    return RatFunc(res) / unscale;
}

}  // namespace gwb
