#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gwb/lonely.hpp"
#include "gwb/print.hpp"
#include "gwb/skew.hpp"

namespace gwb {

template <class K>
using PieceTable = std::map<long long, Poly<K>>;

template <class K>
using FracTable = std::map<long long, PolyFraction<K>>;

template <class K>
PolyFraction<K> apply_sigma(const SigmaLine<K>& line, const PolyFraction<K>& x, long long m) {
    return PolyFraction<K>(apply_sigma(line, x.num(), m), apply_sigma(line, x.den(), m));
}

// prod_i sigma^i(h)^{d_i} over the cycle D = sum d_i Z_i. D must be effective.
template <class K>
Poly<K> translate_product(const SigmaLine<K>& line, const Poly<K>& h, const Cycle& D) {
    Poly<K> r(1);
    for (const auto& [i, d] : D.coeffs()) {
        if (d < 0) throw MathError("cycle not effective", json{{"index", i}, {"coefficient", d}});
        Poly<K> s = apply_sigma(line, h, i);
        for (long long k = 0; k < d; ++k) r = r * s;
    }
    return r;
}

// Graded subring B(G, H, J) of T[t, t^-1; sigma]: degree-n piece generated by
// H[(-G_n)+] J[(G_n)+] t^n, with H = (h), J = (j) powers of one lonely orbit
// generator q, and G pleasantly alternating.
template <class K>
struct GradedRingSpec {
    SigmaLine<K> line;
    Poly<K> q;
    Cycle G;
    Poly<K> h, j;     // canonical monic q-powers (possibly 1)
    long long a = 0;  // h = q^a
    long long b = 0;  // j = q^b
    long long N = 1;  // threshold where iterate(G, n) turns effective
    Cert lonely_cert = Cert::CERTIFIED;
};

namespace detail {

// h must be a scalar times q^a; returns a or throws.
template <class K>
long long q_power_exponent(const SigmaLine<K>& line, const Poly<K>& h, const Poly<K>& q,
                           const char* which) {
    Poly<K> rest = line.multiplicative ? poly_core(h) : h;
    rest = rest.monic();
    long long a = 0;
    while (!rest.is_constant()) {
        if (!poly_divides(q, rest))
            throw MathError("generator not supported on the orbit at index 0",
                            json{{"which", which}});
        rest = poly_divexact(rest, q);
        ++a;
    }
    return a;
}

}  // namespace detail

template <class K>
GradedRingSpec<K> make_spec(const SigmaLine<K>& line, const Poly<K>& q_in, const Cycle& G,
                            const Poly<K>& h_in, const Poly<K>& j_in,
                            long long lonely_window = kDefaultSymbolicWindow,
                            bool validate_lonely = true) {
    GradedRingSpec<K> s;
    s.line = line;
    s.q = canonical_gen(line, q_in);
    if (s.q.is_constant()) throw MathError("orbit generator must be nonconstant");
    if (!is_pleasantly_alternating(G))
        throw MathError("support cycle must be pleasantly alternating");
    s.G = G;
    s.a = detail::q_power_exponent(line, h_in, s.q, "h");
    s.b = detail::q_power_exponent(line, j_in, s.q, "j");
    s.h = s.a == 0 ? Poly<K>(1) : canonical_gen(line, s.q.pow(s.a));
    s.j = s.b == 0 ? Poly<K>(1) : canonical_gen(line, s.q.pow(s.b));
    s.N = std::max<long long>(1, G.max_index() - G.min_index());
    if (validate_lonely) {
        LonelyVerdict v = lonely_on_line(line, s.q, lonely_window);
        if (!v.lonely)
            throw MathError("orbit is not sigma-lonely",
                            json{{"witness_shift", *v.witness_shift}});
        s.lonely_cert = v.cert;
    }
    return s;
}

// g_n generating I_n = H[(-G_n)+] J[(G_n)+]; g_0 = 1.
template <class K>
Poly<K> piece_generator(const GradedRingSpec<K>& s, long long n) {
    if (n == 0) return Poly<K>(1);
    Cycle Gn = iterate(s.G, n);
    Poly<K> g = translate_product(s.line, s.h, pos_part(-Gn)) *
                translate_product(s.line, s.j, pos_part(Gn));
    return canonical_gen(s.line, g);
}

template <class K>
PieceTable<K> piece_table(const GradedRingSpec<K>& s, long long window) {
    PieceTable<K> t;
    for (long long n = -window; n <= window; ++n) t[n] = piece_generator(s, n);
    return t;
}

// Membership: every degree-n coefficient divisible by g_n inside T.
template <class K>
bool contains(const GradedRingSpec<K>& s, const SkewElement<K>& x) {
    for (const auto& [n, c] : x.terms()) {
        if (!s.line.multiplicative && c.has_negative_exp()) return false;
        Poly<K> g = piece_generator(s, n);
        Poly<K> cc = laurent_core(c);
        if (s.line.multiplicative) cc = poly_core(cc);
        if (!poly_divides(g, cc)) return false;
    }
    return true;
}

template <class K>
struct GwaEmbedding {
    SkewElement<K> x, y;
    std::vector<GradedRingSpec<K>> specs;  // one per squarefree component of f
};

// Present the generalized Weyl algebra T(sigma, f) inside T[t, t^-1; sigma]
// via x = t, y = f t^-1. Requires that no two factors of f share an orbit;
// each squarefree component s (multiplicity m) yields the single-orbit spec
// B(Z_0, (sigma(s)^m), T).
template <class K>
GwaEmbedding<K> gwa_embed(const SigmaLine<K>& line, const Poly<K>& f,
                          long long lonely_window = kDefaultSymbolicWindow, bool validate = true) {
    Poly<K> core = line.multiplicative ? poly_core(f) : f;
    if (core.is_constant()) throw MathError("defining element must be nonconstant");
    if (validate) {
        Poly<K> rad = poly_divexact(core, poly_gcd(core, core.derivative())).monic();
        LonelyVerdict v = lonely_on_line(line, rad, lonely_window);
        if (!v.lonely) {
            long long n = *v.witness_shift;
            Poly<K> shared = poly_gcd(rad, apply_sigma(line, rad, n)).monic();
            Poly<K> partner = canonical_gen(line, apply_sigma(line, shared, -n));
            throw MathError("two factors lie on one sigma-orbit",
                            json{{"shift", n},
                                 {"factor", poly_str(shared)},
                                 {"partner", poly_str(partner)}});
        }
    }
    GwaEmbedding<K> out;
    out.x = SkewElement<K>::t_power(1);
    out.y = SkewElement<K>::monomial(LaurentPoly<K>(f), -1);
    for (const auto& [s, m] : squarefree_decomposition(core)) {
        Poly<K> q = canonical_gen(line, apply_sigma(line, canonical_gen(line, s), 1));
        out.specs.push_back(
            make_spec(line, q, Cycle::Z(0), q.pow(m), Poly<K>(1), lonely_window, validate));
    }
    return out;
}

// Degree-m coefficient of psi(B): pieces of the flip satisfy g'_m = sigma^m(g_{-m}).
template <class K>
PieceTable<K> psi_piece_table(const SigmaLine<K>& line, const PieceTable<K>& t) {
    PieceTable<K> r;
    for (const auto& [n, g] : t) r[-n] = canonical_gen(line, apply_sigma(line, g, -n));
    return r;
}

// Twist cocycle: x_0 = 1, x_n = x sigma(x)...sigma^{n-1}(x),
// x_{-n} = (sigma^{-1}(x)...sigma^{-n}(x))^{-1}. Satisfies x_m sigma^m(x_n) = x_{m+n}.
template <class K>
PolyFraction<K> twist_cocycle(const SigmaLine<K>& line, const PolyFraction<K>& x, long long n) {
    PolyFraction<K> r(1);
    if (n >= 1)
        for (long long k = 0; k < n; ++k) r = r * apply_sigma(line, x, k);
    else
        for (long long k = 1; k <= -n; ++k) r = r * apply_sigma(line, x, -k);
    return n >= 0 ? r : r.inverse();
}

template <class K>
FracTable<K> pic_twist(const SigmaLine<K>& line, const FracTable<K>& pieces,
                       const PolyFraction<K>& x) {
    if (x.is_zero()) throw MathError("twist by zero");
    FracTable<K> r;
    for (const auto& [n, g] : pieces) r[n] = g * twist_cocycle(line, x, n);
    return r;
}

// Whether a fraction lies in T: polynomial, up to a unit u^k on a
// multiplicative line.
template <class K>
bool is_integral(const SigmaLine<K>& line, const PolyFraction<K>& x) {
    if (x.is_zero()) return true;
    if (line.multiplicative) return (long long)x.den().coeffs().size() == 1;
    return x.is_polynomial();
}

// First degree whose twisted generator leaves T, if any.
template <class K>
std::optional<long long> twist_integral_witness(const SigmaLine<K>& line, const FracTable<K>& t) {
    for (const auto& [n, g] : t)
        if (!is_integral(line, g)) return n;
    return std::nullopt;
}

}  // namespace gwb
