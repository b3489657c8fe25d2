#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gwb/multipoly.hpp"
#include "gwb/sigma.hpp"

namespace gwb {

struct LonelyVerdict {
    bool lonely = false;
    std::optional<long long> witness_shift;      // n != 0 with gcd(f, sigma^n(f)) != 1
    std::optional<std::vector<Rat>> witness_point;  // torus point killing f and sigma^n(f)
    Cert cert = Cert::WINDOWED;
    long long bound = 0;
};

// f generates a sigma-lonely set iff no nonzero power of sigma maps a factor
// of f onto another factor, i.e. the self-incidence set is exactly {0}.
template <class K>
LonelyVerdict lonely_on_line(const SigmaLine<K>& line, const Poly<K>& f,
                             long long window = kDefaultSymbolicWindow) {
    if (f.is_zero()) throw MathError("loneliness of zero element");
    Poly<K> core = line.multiplicative ? poly_core(f) : f;
    if (core.is_constant()) return LonelyVerdict{true, std::nullopt, std::nullopt, Cert::CERTIFIED, 0};

    Incidence inc = orbit_incidence(line, core, core, window);
    LonelyVerdict out;
    out.cert = inc.cert;
    out.bound = inc.bound;
    out.lonely = true;
    long long best = 0;
    for (long long i : inc.indices) {
        if (i == 0) continue;
        out.lonely = false;
        long long a = i < 0 ? -i : i;
        if (best == 0 || a < best) best = a;
    }
    if (!out.lonely) {
        out.witness_shift = best;  // positive representative; incidence is symmetric
        out.cert = Cert::CERTIFIED;
    }
    return out;
}

// Lonely over the additive line iff no two roots differ by a nonzero integer.
inline LonelyVerdict is_lonely_additive(const Poly<Rat>& f) {
    if (f.is_constant()) throw MathError("loneliness requires a nonunit");
    return lonely_on_line(additive_line(), f);
}

// Lonely under z -> rho*z iff no two roots have ratio a nontrivial power of rho.
template <class K>
LonelyVerdict is_lonely_multiplicative(const Poly<K>& f, const K& rho,
                                       long long window = kDefaultSymbolicWindow) {
    if (f.is_constant()) throw MathError("loneliness requires a nonunit");
    if (f.constant_term() == K(0)) throw MathError("normalize first: constant term must be nonzero");
    return lonely_on_line(multiplicative_line(rho), f, window);
}

// A finite point set is lonely iff no two distinct points share a sigma-orbit.
template <class K>
LonelyVerdict is_lonely_points(const SigmaLine<K>& line, const std::vector<Poly<K>>& points,
                               long long window = kDefaultWindow) {
    if (points.empty()) throw MathError("empty point set");
    LonelyVerdict out;
    out.lonely = true;
    out.cert = Cert::CERTIFIED;
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            OrbitMatch m = same_orbit(line, points[a], points[b], window);
            if (m.shift) {
                out.lonely = false;
                long long s = *m.shift;
                out.witness_shift = s < 0 ? -s : s;
                out.cert = Cert::CERTIFIED;
                return out;
            }
            if (m.cert == Cert::WINDOWED) out.cert = Cert::WINDOWED;
        }
    out.bound = window;
    return out;
}

namespace detail {

inline std::optional<std::vector<Rat>> rat_roots_nonzero(const Poly<Rat>& f) {
    auto rr = rational_roots(f);
    if (!rr) return std::nullopt;
    std::vector<Rat> out;
    for (const auto& [c, m] : *rr)
        if (!(c == Rat(0))) out.push_back(c);
    return out;
}

// Project a two-coordinate slice to a polynomial in u with coefficients in
// Q(p); multiplicative u-exponents are cleared by a unit power of u, which
// preserves common zeros with nonzero coordinates.
inline Poly<RatFunc> to_bivariate(const MultiPoly<Rat>& f, long long ui, long long pi) {
    long long lo = 0;
    for (const auto& [e, c] : f.coeffs()) lo = std::min(lo, e[ui]);
    Poly<RatFunc> out;
    RatFunc pv = RatFunc::var();
    for (const auto& [e, c] : f.coeffs()) {
        RatFunc w = RatFunc(Poly<Rat>(c)) * frac_pow(pv, e[pi]);
        out.set_coeff(e[ui] - lo, out.coeff(e[ui] - lo) + w);
    }
    return out;
}

inline std::optional<Poly<Rat>> specialize_p(const Poly<RatFunc>& f, const Rat& b) {
    Poly<Rat> out;
    for (const auto& [k, c] : f.coeffs()) {
        Rat dn = c.den().eval(b);
        if (dn == Rat(0)) return std::nullopt;
        out.set_coeff(k, c.num().eval(b) / dn);
    }
    return out;
}

}  // namespace detail

// Best-effort common zero of f and sigma^n(f) with all coordinates nonzero,
// for small n. Extra coordinates beyond two effective ones are frozen at
// small nonzero values; the two-variable system is solved by elimination.
inline std::optional<std::pair<long long, std::vector<Rat>>> torus_point_witness(
    const Torus<Rat>& t, const MultiPoly<Rat>& f, long long max_n = 6) {
    std::vector<long long> eff;
    for (long long i = 0; i < f.dim(); ++i)
        if (f.uses_coord(i)) eff.push_back(i);
    if (eff.size() < 2) return std::nullopt;
    long long ui = eff[0], pi = eff[1];

    std::vector<Rat> fills = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3)};
    if (eff.size() == 2) fills = {Rat(1)};

    for (long long n = 1; n <= max_n; ++n) {
        MultiPoly<Rat> fs = apply_sigma(t, f, n);
        for (const Rat& fill : fills) {
            // freeze every coordinate except ui, pi
            auto freeze = [&](const MultiPoly<Rat>& g) {
                MultiPoly<Rat> r(g.dim());
                for (const auto& [e, c] : g.coeffs()) {
                    Rat v = c;
                    typename MultiPoly<Rat>::Expo ne(g.dim(), 0);
                    for (long long i = 0; i < g.dim(); ++i) {
                        if (i == ui || i == pi)
                            ne[i] = e[i];
                        else if (e[i] != 0)
                            v *= rat_pow(fill, e[i]);
                    }
                    r.add_term(ne, v);
                }
                return r;
            };
            MultiPoly<Rat> f0 = freeze(f), f1 = freeze(fs);
            if (f0.is_zero() || f1.is_zero()) continue;
            Poly<RatFunc> F = detail::to_bivariate(f0, ui, pi);
            Poly<RatFunc> G = detail::to_bivariate(f1, ui, pi);

            std::vector<Rat> bs;
            if (F.degree() >= 1 && G.degree() >= 1) {
                RatFunc R = resultant(F, G);
                if (R.is_zero()) {
                    bs = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3)};
                } else if (auto roots = detail::rat_roots_nonzero(R.num())) {
                    bs = *roots;
                }
            } else {
                const Poly<RatFunc>& cst = F.degree() < 1 ? F : G;
                if (cst.is_zero()) continue;
                if (auto roots = detail::rat_roots_nonzero(cst.coeff(0).num())) bs = *roots;
            }

            for (const Rat& b : bs) {
                auto fb = detail::specialize_p(F, b);
                auto gb = detail::specialize_p(G, b);
                if (!fb || !gb) continue;
                std::vector<Rat> as;
                if (fb->is_zero() || gb->is_zero()) {
                    as = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3)};
                } else {
                    Poly<Rat> g = poly_gcd(*fb, *gb);
                    if (g.is_constant()) continue;
                    if (auto roots = detail::rat_roots_nonzero(g))
                        as = *roots;
                    else
                        continue;
                }
                for (const Rat& a : as) {
                    std::vector<Rat> pt(f.dim(), fill);
                    pt[ui] = a;
                    pt[pi] = b;
                    if (f.eval(pt) == Rat(0) && fs.eval(pt) == Rat(0))
                        return std::make_pair(n, pt);
                }
            }
        }
    }
    return std::nullopt;
}

template <class K>
std::optional<std::pair<long long, std::vector<Rat>>> torus_point_witness(
    const Torus<K>&, const MultiPoly<K>&, long long = 6) {
    return std::nullopt;  // symbolic tori: witness search not attempted
}

// Full decision for f on a torus: pure additive and lattice-line inputs
// reduce to one-variable criteria; anything mixing the additive coordinate
// with another variable, or spreading over non-collinear exponents, always
// admits a shift sharing a factor, hence is never lonely.
template <class K>
LonelyVerdict is_lonely(const Torus<K>& t, const MultiPoly<K>& f_raw,
                        long long window = kDefaultSymbolicWindow) {
    if ((long long)f_raw.dim() != t.dim()) throw MathError("dimension mismatch");
    if (f_raw.is_zero()) throw MathError("loneliness of zero element");
    MultiPoly<K> f = unit_normalize(t, f_raw);
    if (f.is_constant()) throw MathError("loneliness requires a nonunit");

    bool uses_add = t.has_additive && f.uses_coord(0);
    bool uses_mult = false;
    for (long long j = t.mult_offset(); j < f.dim(); ++j)
        if (f.uses_coord(j)) uses_mult = true;

    if (uses_add && !uses_mult) {
        if constexpr (std::is_same_v<K, Rat>) {
            Poly<Rat> g;
            for (const auto& [e, c] : f.coeffs()) g.set_coeff(e[0], c);
            return is_lonely_additive(g);
        } else {
            throw MathError("additive coordinate requires rational coefficients");
        }
    }

    LonelyVerdict out;
    if (uses_add && uses_mult) {
        out.lonely = false;
        out.cert = Cert::CERTIFIED;  // mixed support always admits a sharing shift
        if (auto w = torus_point_witness(t, f)) {
            out.witness_shift = w->first;
            out.witness_point = w->second;
        }
        return out;
    }

    if (auto red = lattice_line_reduce(t, f)) {
        LonelyVerdict v = is_lonely_multiplicative(red->g, line_ratio(t, red->direction), window);
        return v;
    }

    out.lonely = false;
    out.cert = Cert::CERTIFIED;  // non-collinear support always admits a sharing shift
    if (auto w = torus_point_witness(t, f)) {
        out.witness_shift = w->first;
        out.witness_point = w->second;
    }
    return out;
}

// Exact re-validation of a not-lonely witness, per the reporting contract:
// either the shift produces a common factor, or the point kills f and
// sigma^n(f) with every coordinate nonzero.
template <class K>
bool validate_lonely_witness(const Torus<K>& t, const MultiPoly<K>& f_raw, const LonelyVerdict& v) {
    if (v.lonely) return true;
    MultiPoly<K> f = unit_normalize(t, f_raw);
    if (v.witness_point) {
        if constexpr (std::is_same_v<K, Rat>) {
            if (!v.witness_shift) return false;
            for (const Rat& c : *v.witness_point)
                if (c == Rat(0)) return false;
            MultiPoly<Rat> fs = apply_sigma(t, f, *v.witness_shift);
            return f.eval(*v.witness_point) == Rat(0) && fs.eval(*v.witness_point) == Rat(0);
        } else {
            return false;
        }
    }
    if (!v.witness_shift) return false;
    // shift witness: common factor must be visible on the reduced line
    if (auto red = lattice_line_reduce(t, f)) {
        SigmaLine<K> line = multiplicative_line(line_ratio(t, red->direction));
        Poly<K> a = red->g;
        Poly<K> b = apply_sigma(line, red->g, *v.witness_shift);
        return !poly_gcd(a, b).is_constant();
    }
    if (t.has_additive && !f.uses_coord(0)) return false;
    if constexpr (std::is_same_v<K, Rat>) {
        Poly<Rat> g;
        for (const auto& [e, c] : f.coeffs()) g.set_coeff(e[0], c);
        Poly<Rat> gs = apply_sigma(additive_line(), g, *v.witness_shift);
        return !poly_gcd(g, gs).is_constant();
    } else {
        return false;
    }
}

template <class K>
bool validate_lonely_witness(const SigmaLine<K>& line, const Poly<K>& f, const LonelyVerdict& v) {
    if (v.lonely) return true;
    if (!v.witness_shift) return false;
    Poly<K> a = line.multiplicative ? poly_core(f) : f;
    Poly<K> b = apply_sigma(line, a, *v.witness_shift);
    return !poly_gcd(a, b).is_constant();
}

}  // namespace gwb
