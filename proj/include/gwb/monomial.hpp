#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "gwb/fraction.hpp"
#include "gwb/laurent.hpp"

namespace gwb {

namespace detail {

// All positive divisors of |n|, or nullopt when |n| has a prime factor beyond
// the trial-division reach (the caller then falls back to windowed scans).
inline std::optional<std::vector<Int>> divisors_of(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    for (Int p = 2; p * p <= m && p <= 1000000; p += 1) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) {
        // No factor <= 10^6; prime iff below 10^12, otherwise give up.
        if (m > Int("1000000000000")) return std::nullopt;
        fac.emplace_back(m, 1);
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 100000) return std::nullopt;
    }
    return divs;
}

}  // namespace detail

// Nonzero rational roots of g over Q, with multiplicity, by the rational root
// theorem on the integer-cleared polynomial. nullopt if the constant or
// leading coefficient cannot be factored within the trial bound.
inline std::optional<std::vector<std::pair<Rat, long long>>> rational_roots(Poly<Rat> g) {
    if (g.is_zero()) throw MathError("roots of zero polynomial");
    g = poly_core(g);  // strip w^m: zero roots are not reported
    if (g.is_constant()) return std::vector<std::pair<Rat, long long>>{};
    Int den(1);
    for (const auto& [e, v] : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    Poly<Rat> gi = g.scaled(Rat(den));
    Int a0 = gi.constant_term().get_num();
    Int ad = gi.lc().get_num();
    auto d0 = detail::divisors_of(a0);
    auto dd = detail::divisors_of(ad);
    if (!d0 || !dd) return std::nullopt;
    std::set<Rat> candidates;
    for (const Int& r : *d0)
        for (const Int& s : *dd) {
            Rat c(r, s);
            c.canonicalize();
            candidates.insert(c);
            candidates.insert(Rat(-c));
        }
    std::vector<std::pair<Rat, long long>> out;
    for (const Rat& c : candidates) {
        if (g.eval(c) != 0) continue;
        Poly<Rat> lin = Poly<Rat>::var() - Poly<Rat>(c);
        out.emplace_back(c, poly_multiplicity(g, lin));
    }
    return out;
}

// A root of the exact form c * p^k, c in Q nonzero, k in Z.
struct MonomialRoot {
    Rat c;
    long long k = 0;
    long long multiplicity = 1;
};

// Complete splitting of f over Q(p) into roots c * p^k, when it exists.
// Newton-polygon slopes give the candidate k's; slope residues give the
// candidate c's; trial division confirms. nullopt means f has a root not of
// that form (or factoring exceeded the trial bounds) and callers must fall
// back to windowed verdicts. Precondition: f nonzero with f(0) != 0.
inline std::optional<std::vector<MonomialRoot>> monomial_roots(Poly<RatFunc> f) {
    if (f.is_zero()) throw MathError("monomial roots of zero polynomial");
    if (f.constant_term() == RatFunc(0)) return std::nullopt;
    f = f.monic();
    std::vector<MonomialRoot> out;
    const RatFunc p = RatFunc::var();
    for (int guard = 0; guard < 256 && f.degree() > 0; ++guard) {
        // Lower Newton polygon of (exponent, p-valuation).
        std::vector<std::pair<long long, long long>> pts;
        for (const auto& [e, v] : f.coeffs()) pts.emplace_back(e, ratfunc_val(v));
        std::set<long long> ks;
        size_t at = 0;  // pts sorted ascending by exponent; lowest is exponent 0
        while (at + 1 < pts.size()) {
            size_t best = at + 1;
            for (size_t j = at + 2; j < pts.size(); ++j) {
                // slope(at->j) <= slope(at->best), ties to the farthest point
                __int128 lhs = static_cast<__int128>(pts[j].second - pts[at].second) * (pts[best].first - pts[at].first);
                __int128 rhs = static_cast<__int128>(pts[best].second - pts[at].second) * (pts[j].first - pts[at].first);
                if (lhs <= rhs) best = j;
            }
            long long dv = pts[best].second - pts[at].second;
            long long di = pts[best].first - pts[at].first;
            if (dv % di != 0) return std::nullopt;  // fractional valuation root
            ks.insert(-(dv / di));
            at = best;
        }
        long long deg_before = f.degree();
        for (long long k : ks) {
            // Residue polynomial of the slope -k segment.
            RatFunc pk = frac_pow(p, k);
            Poly<Rat> gbar;
            bool first = true;
            long long m = 0;
            std::vector<std::pair<long long, RatFunc>> scaled;
            for (const auto& [e, v] : f.coeffs()) {
                RatFunc w = v * frac_pow(pk, e);
                long long val = ratfunc_val(w);
                if (first || val < m) m = val;
                first = false;
                scaled.emplace_back(e, w);
            }
            for (const auto& [e, w] : scaled)
                if (ratfunc_val(w) == m) gbar.set_coeff(e, ratfunc_lead(w));
            auto roots = rational_roots(gbar);
            if (!roots) return std::nullopt;
            for (const auto& [c, mult] : *roots) {
                Poly<RatFunc> lin = Poly<RatFunc>::var() - Poly<RatFunc>(RatFunc(Poly<Rat>(c)) * pk);
                long long taken = 0;
                while (f.degree() > 0) {
                    auto [q, r] = poly_divmod(f, lin);
                    if (!r.is_zero()) break;
                    f = q;
                    ++taken;
                }
                if (taken > 0) out.push_back(MonomialRoot{c, k, taken});
            }
        }
        if (f.degree() == deg_before) return std::nullopt;  // no progress: not monomial-split
    }
    if (f.degree() > 0) return std::nullopt;
    return out;
}

}  // namespace gwb
