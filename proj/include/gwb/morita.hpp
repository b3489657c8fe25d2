#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "gwb/verify.hpp"

namespace gwb {

// Progenerator profile S -> cycle Z_base + sigma^{-1}(D) - D with
// D = sum_{j in S} Z_{base+j}. Output is pleasantly alternating.
inline Cycle cycle_from_S(const std::set<long long>& S, long long base = 0) {
    Cycle D;
    for (long long j : S) {
        if (j < 0) throw MathError("profile offsets must be nonnegative", json{{"offset", j}});
        D.set_coeff(base + j, 1);
    }
    return Cycle::Z(base) + shift(D, -1) - D;
}

// Inverse profile: S = { i >= 0 : sum_{j<=i} g_j = 0 }. Defined for
// pleasantly alternating cycles supported in [0, inf); prefix sums of such a
// cycle live in {0, 1} and end at 1, so S is finite.
inline std::set<long long> s_from_cycle(const Cycle& G) {
    if (!is_pleasantly_alternating(G)) throw MathError("cycle is not pleasantly alternating");
    if (G.min_index() < 0)
        throw MathError("support must start at a nonnegative index",
                        json{{"min_index", G.min_index()}});
    std::set<long long> S;
    long long run = 0;
    for (long long i = 0; i < G.max_index(); ++i) {
        run += G.coeff(i);
        if (run == 0) S.insert(i);
    }
    return S;
}

// Right-ideal progenerator L: L_n = (h[F_n]) with F_n = E_n + sum_{j in S, n<=j} Z_j,
// E_n = 0 for n >= 0 and Z_n + ... + Z_{-1} for n <= -1. S = empty gives the
// ring itself.
template <class K>
FracTable<K> build_L(const SigmaLine<K>& line, const Poly<K>& h, const Poly<K>& q,
                     const std::set<long long>& S, long long lo, long long hi) {
    Poly<K> hc = canonical_gen(line, h);
    if (!hc.is_constant()) detail::q_power_exponent(line, hc, canonical_gen(line, q), "h");
    FracTable<K> L;
    for (long long n = lo; n <= hi; ++n) {
        Cycle F;
        if (n <= -1)
            for (long long i = n; i <= -1; ++i) F.set_coeff(i, 1);
        for (long long j : S)
            if (n <= j) F.set_coeff(j, F.coeff(j) + 1);
        L[n] = PolyFraction<K>(translate_product(line, hc, F));
    }
    return L;
}

// Transporter generator {x : x (a) subseteq (b)} = fractional ideal b/a.
template <class K>
PolyFraction<K> hom_generator(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) throw MathError("transporter of a zero ideal");
    return PolyFraction<K>(b, a);
}

template <class K>
PolyFraction<K> frac_canonical(const SigmaLine<K>& line, const PolyFraction<K>& x) {
    if (x.is_zero()) return x;
    return PolyFraction<K>(canonical_gen(line, x.num()), canonical_gen(line, x.den()));
}

// Intersection of principal fractional ideals over a PID: put everything over
// the lcm denominator, then take the numerator lcm.
template <class K>
PolyFraction<K> frac_intersect(const std::vector<PolyFraction<K>>& xs) {
    if (xs.empty()) throw MathError("intersection of an empty family");
    Poly<K> den(1);
    for (const auto& x : xs) {
        if (x.is_zero()) throw MathError("intersection with a zero ideal");
        den = poly_lcm(den, x.den());
    }
    Poly<K> num(1);
    for (const auto& x : xs) num = poly_lcm(num, x.num() * poly_divexact(den, x.den()));
    return PolyFraction<K>(num, den);
}

// Degree-m piece of Hom(src, dst) inside K[t, t^-1; sigma]:
// intersection over n of dst_{n+m} / sigma^m(src_n). The window must be wide
// enough that dropping the outermost term at each end changes nothing.
template <class K>
FracTable<K> hom_pieces(const SigmaLine<K>& line, const FracTable<K>& src,
                        const FracTable<K>& dst, long long window) {
    FracTable<K> out;
    for (long long m = -window; m <= window; ++m) {
        long long n_lo = std::max(src.begin()->first, dst.begin()->first - m);
        long long n_hi = std::min(src.rbegin()->first, dst.rbegin()->first - m);
        if (n_hi - n_lo < 4) throw MathError("window not stabilized", json{{"degree", m}});
        std::vector<PolyFraction<K>> full, inner;
        for (long long n = n_lo; n <= n_hi; ++n) {
            PolyFraction<K> shifted = apply_sigma(line, src.at(n), m);
            PolyFraction<K> term(dst.at(n + m).num() * shifted.den(),
                                 dst.at(n + m).den() * shifted.num());
            full.push_back(term);
            if (n != n_lo && n != n_hi) inner.push_back(term);
        }
        PolyFraction<K> a = frac_canonical(line, frac_intersect(full));
        PolyFraction<K> b = frac_canonical(line, frac_intersect(inner));
        if (!(a == b)) throw MathError("window not stabilized", json{{"degree", m}});
        out[m] = a;
    }
    return out;
}

template <class K>
FracTable<K> end_of_module(const SigmaLine<K>& line, const FracTable<K>& L, long long window) {
    return hom_pieces(line, L, L, window);
}

// Full graded Morita check for a target with trivial second family: End of
// the profile progenerator must reproduce the target's pieces, and the
// evaluation pairings L.M and M.L must both hit the unit ideal in degree 0.
template <class K>
Report check_morita(const GradedRingSpec<K>& s, long long window = 8) {
    Report r{"morita", Verdict::PASS, -window, window};
    if (s.b != 0)
        throw MathError("check requires the second translate family to be trivial",
                        json{{"j", poly_str(s.j)}});
    Cycle G = s.G;
    long long moved = 0;
    if (G.min_index() < 0) {
        moved = G.min_index();
        G = shift(G, moved);
    }
    std::set<long long> S = s_from_cycle(G);
    if (!(cycle_from_S(S) == G)) throw MathError("profile round-trip failed");
    GradedRingSpec<K> target =
        moved == 0 ? s : make_spec(s.line, s.q, G, s.h, s.j, kDefaultSymbolicWindow, false);

    long long max_s = S.empty() ? 0 : *S.rbegin();
    long long R = window + max_s + G.span() + 2;
    FracTable<K> L = build_L(s.line, s.h, s.q, S, -R, R);
    FracTable<K> E = end_of_module(s.line, L, window);
    for (long long m = -window; m <= window; ++m) {
        const PolyFraction<K>& e = E.at(m);
        Poly<K> want = piece_generator(target, m);
        if (!e.is_polynomial() || !(canonical_gen(s.line, e.num()) == want)) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"degree", m}, {"end_generator", frac_str(e)},
                             {"ring_generator", poly_str(want)}};
            return r;
        }
    }

    FracTable<K> A = build_L(s.line, s.h, s.q, std::set<long long>{}, -R, R);
    FracTable<K> M = hom_pieces(s.line, L, A, window);
    const char* sides[2] = {"L.M", "M.L"};
    for (int side = 0; side < 2; ++side) {
        Poly<K> acc;
        for (long long n = -window; n <= window; ++n) {
            const FracTable<K>& first = side == 0 ? L : M;
            const FracTable<K>& second = side == 0 ? M : L;
            PolyFraction<K> prod = first.at(n) * apply_sigma(s.line, second.at(-n), n);
            if (!prod.is_polynomial()) {
                r.verdict = Verdict::FAIL;
                r.witness = json{{"pairing", sides[side]}, {"n", n}, {"product", frac_str(prod)}};
                return r;
            }
            acc = poly_gcd(acc, canonical_gen(s.line, prod.num()));
            if (acc.is_constant() && !acc.is_zero()) break;
        }
        if (!acc.is_constant() || acc.is_zero()) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"pairing", sides[side]}, {"stable_gcd", poly_str(acc)}};
            return r;
        }
    }
    json sj = json::array();
    for (long long j : S) sj.push_back(j);
    r.witness = json{{"S", sj}, {"normalized_shift", moved}};
    return r;
}

}  // namespace gwb
