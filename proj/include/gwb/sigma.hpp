#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gwb/cycle.hpp"
#include "gwb/laurent.hpp"
#include "gwb/monomial.hpp"
#include "gwb/resultant.hpp"

namespace gwb {

// Completeness status of an enumeration: CERTIFIED means a proven a-priori
// bound covered every candidate; WINDOWED means only |i| <= window was tested.
enum class Cert { CERTIFIED, WINDOWED };

inline const char* cert_name(Cert c) { return c == Cert::CERTIFIED ? "CERTIFIED" : "WINDOWED"; }

constexpr long long kDefaultWindow = 12;
constexpr long long kDefaultSymbolicWindow = 64;

// One-dimensional coordinate line with automorphism sigma:
//   additive        T = K[u],        sigma(u) = u + 1
//   multiplicative  T = K[u, u^-1],  sigma(u) = p * u
template <class K>
struct SigmaLine {
    bool multiplicative = false;
    K p{};
};

inline SigmaLine<Rat> additive_line() { return SigmaLine<Rat>{false, Rat(0)}; }

template <class K>
SigmaLine<K> multiplicative_line(const K& p) {
    if (p == K(0) || p == K(1) || p == K(0) - K(1))
        throw MathError("multiplicative parameter must avoid 0 and roots of unity");
    return SigmaLine<K>{true, p};
}

// sigma^m on polynomials: u -> u + m, or coefficient of u^k scaled by p^(mk).
template <class K>
Poly<K> apply_sigma(const SigmaLine<K>& line, const Poly<K>& f, long long m) {
    if (m == 0) return f;
    if (!line.multiplicative) return f.compose_shift(m);
    return f.scale_arg(field_pow(line.p, m));
}

template <class K>
LaurentPoly<K> apply_sigma(const SigmaLine<K>& line, const LaurentPoly<K>& f, long long m) {
    if (m == 0) return f;
    if (!line.multiplicative) {
        if (f.has_negative_exp())
            throw MathError("additive sigma undefined on negative exponents",
                            json{{"low_exponent", f.low_exp()}});
        return LaurentPoly<K>(f.as_poly().compose_shift(m));
    }
    LaurentPoly<K> r;
    for (const auto& [e, v] : f.coeffs()) r.set_coeff(e, v * field_pow(line.p, m * e));
    return r;
}

// Canonical ideal generator: monic; in the multiplicative (Laurent) ring the
// unit u^k is stripped first so the constant term is nonzero.
template <class K>
Poly<K> canonical_gen(const SigmaLine<K>& line, const Poly<K>& f) {
    if (f.is_zero()) return f;
    Poly<K> g = line.multiplicative ? poly_core(f) : f;
    return g.monic();
}

template <class K>
Poly<K> canonical_gen(const SigmaLine<K>& line, const LaurentPoly<K>& f) {
    if (f.is_zero()) return Poly<K>();
    return canonical_gen(line, laurent_core(f));
}

// Exact exponent of sigma^i(q) dividing f. The coefficient of Z_i in a support
// cycle is exactly this number (orientation convention of the whole artifact).
template <class K>
long long multiplicity(const SigmaLine<K>& line, const Poly<K>& f, const Poly<K>& q, long long i) {
    if (f.is_zero()) throw MathError("multiplicity in zero element");
    Poly<K> qi = canonical_gen(line, apply_sigma(line, q, i));
    if (qi.is_constant()) throw MathError("multiplicity of constant divisor");
    Poly<K> ff = line.multiplicative ? poly_core(f) : f;
    return poly_multiplicity(ff, qi);
}

struct Incidence {
    std::vector<long long> indices;  // sorted: i with gcd(f, sigma^i(q)) != 1
    Cert cert = Cert::WINDOWED;
    long long bound = 0;  // extent actually scanned or certified
};

namespace detail {

template <class K>
bool shares_factor(const SigmaLine<K>& line, const Poly<K>& f, const Poly<K>& q, long long i) {
    Poly<K> qi = apply_sigma(line, q, i);
    if (f.is_constant() || qi.is_constant()) return false;
    return resultant(f, qi) == K(0);
}

// Annulus bounds: every root z of a core polynomial satisfies
// inner <= |z| <= outer.
inline std::pair<Rat, Rat> root_annulus(const Poly<Rat>& core) {
    auto bound = [](const Poly<Rat>& g) {
        return std::min(cauchy_root_bound(g), fujiwara_root_bound(g));
    };
    Rat outer = bound(core);
    Rat inner = Rat(1) / bound(core.reversed());
    return {inner, outer};
}

}  // namespace detail

// Indices i with f and sigma^i(q) sharing a factor, tested by resultant.
// Additive and rational-multiplicative lines certify completeness from root
// magnitude bounds; symbolic lines certify via monomial-root bookkeeping when
// possible and otherwise return a WINDOWED scan.
template <class K>
Incidence orbit_incidence(const SigmaLine<K>& line, const Poly<K>& f_in, const Poly<K>& q_in,
                          long long window = kDefaultWindow) {
    if (f_in.is_zero()) throw MathError("orbit incidence of zero element");
    if (q_in.is_constant()) throw MathError("orbit point must be nonconstant");
    Poly<K> f = line.multiplicative ? poly_core(f_in) : f_in;
    Poly<K> q = line.multiplicative ? poly_core(q_in) : q_in;
    Incidence out;

    auto scan = [&](long long bound) {
        for (long long i = -bound; i <= bound; ++i)
            if (detail::shares_factor(line, f, q, i)) out.indices.push_back(i);
        out.bound = bound;
    };

    if constexpr (std::is_same_v<K, Rat>) {
        auto root_bound = [](const Poly<Rat>& g) {
            return std::min(cauchy_root_bound(g), fujiwara_root_bound(g));
        };
        if (!line.multiplicative) {
            Rat bound = f.is_constant() ? Rat(1) : root_bound(f) + root_bound(q);
            scan(rat_ceil(bound).get_si());
            out.cert = Cert::CERTIFIED;
            return out;
        }
        if (f.is_constant()) {
            out.cert = Cert::CERTIFIED;
            out.bound = 0;
            return out;
        }
        auto [fi, fo] = detail::root_annulus(f);
        auto [qi2, qo] = detail::root_annulus(q);
        Rat ratio = std::max(fo, qo) / std::min(fi, qi2);
        Rat growth = rat_abs(line.p);
        if (growth < 1) growth = Rat(1) / growth;
        long long bound = 1;
        Rat acc = growth;
        while (acc <= ratio && bound < (1LL << 40)) {
            acc *= growth;
            ++bound;
        }
        scan(bound);
        out.cert = Cert::CERTIFIED;
        return out;
    } else {
        if (line.multiplicative) {
            auto pmono = ratfunc_as_monomial(line.p);
            auto fr = f.is_constant() ? std::make_optional(std::vector<MonomialRoot>{}) : monomial_roots(f);
            auto qr = monomial_roots(q);
            if (pmono && fr && qr) {
                const auto& [pc, pg] = *pmono;
                std::set<long long> hits;
                for (const auto& rf : *fr)
                    for (const auto& rq : *qr) {
                        // sigma^i(q) vanishes at (root of q) / p^i; match to a root of f.
                        if (pg != 0) {
                            long long dk = rq.k - rf.k;
                            if (dk % pg != 0) continue;
                            long long i = dk / pg;
                            if (rat_pow(pc, i) * rf.c == rq.c) hits.insert(i);
                        } else {
                            if (rq.k != rf.k) continue;
                            auto n = rat_dlog(pc, rq.c / rf.c);
                            if (n) hits.insert(*n);
                        }
                    }
                out.indices.assign(hits.begin(), hits.end());
                long long extent = 0;
                for (long long i : out.indices) extent = std::max(extent, i < 0 ? -i : i);
                out.bound = extent;
                out.cert = Cert::CERTIFIED;
                return out;
            }
        }
        scan(window);
        out.cert = Cert::WINDOWED;
        return out;
    }
}

struct OrbitMatch {
    std::optional<long long> shift;
    Cert cert = Cert::WINDOWED;
};

// The i with sigma^i(q1) associate to q2, if any. Unique for lonely atoms.
template <class K>
OrbitMatch same_orbit(const SigmaLine<K>& line, const Poly<K>& q1, const Poly<K>& q2,
                      long long window = kDefaultWindow) {
    Poly<K> c2 = canonical_gen(line, q2);
    Incidence inc = orbit_incidence(line, c2, q1, window);
    OrbitMatch out;
    out.cert = inc.cert;
    for (long long i : inc.indices) {
        if (canonical_gen(line, apply_sigma(line, q1, i)) == c2) {
            out.shift = i;
            out.cert = Cert::CERTIFIED;  // an exhibited match is exact
            break;
        }
    }
    return out;
}

}  // namespace gwb
