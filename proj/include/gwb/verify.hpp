#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gwb/graded.hpp"

namespace gwb {

enum class Verdict { PASS, FAIL, WINDOWED_PASS };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        default: return "WINDOWED-PASS";
    }
}

struct Report {
    std::string check;
    Verdict verdict = Verdict::PASS;
    long long window_lo = 0, window_hi = 0;
    json witness = json::object();

    bool ok() const { return verdict != Verdict::FAIL; }
    json to_json() const {
        return json{{"check", check},
                    {"verdict", verdict_name(verdict)},
                    {"window", json::array({window_lo, window_hi})},
                    {"witness", witness}};
    }
};

namespace detail {

template <class K>
Poly<K> shifted_product(const SigmaLine<K>& line, const Poly<K>& a, long long m, const Poly<K>& b) {
    return canonical_gen(line, a * apply_sigma(line, b, m));
}

// Lazily filled generator table, so checks only compute the degrees they touch.
template <class K>
class PieceCache {
public:
    explicit PieceCache(const GradedRingSpec<K>& s) : s_(s) {}
    const Poly<K>& get(long long n) {
        auto it = t_.find(n);
        if (it == t_.end()) it = t_.emplace(n, piece_generator(s_, n)).first;
        return it->second;
    }

private:
    const GradedRingSpec<K>& s_;
    PieceTable<K> t_;
};

}  // namespace detail

// B_n B_-n + B_-n B_n must be the unit ideal of R: over a PID,
// gcd(g_n sigma^n(g_-n), g_-n sigma^-n(g_n)) = 1 for every n in the range.
template <class K>
Report check_comaximality(const GradedRingSpec<K>& s, long long n_lo, long long n_hi) {
    Report r{"comaximality", Verdict::PASS, n_lo, n_hi};
    detail::PieceCache<K> pc(s);
    for (long long n = n_lo; n <= n_hi; ++n) {
        Poly<K> lhs = detail::shifted_product(s.line, pc.get(n), n, pc.get(-n));
        Poly<K> rhs = detail::shifted_product(s.line, pc.get(-n), -n, pc.get(n));
        Poly<K> g = poly_gcd(lhs, rhs);
        if (!g.is_constant()) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"n", n}, {"common_factor", poly_str(g)}};
            return r;
        }
    }
    return r;
}

template <class K>
Report check_comaximality(const GradedRingSpec<K>& s, long long window = kDefaultWindow) {
    return check_comaximality(s, s.N, s.N + window);
}

// Necessary simplicity condition at level n: the ideals I_i sigma^i(I_-i) +
// I_-i sigma^-i(I_i) for i >= n sum to R; certified when the gcd over the
// window [n, n+window] already reaches 1.
template <class K>
Report check_simplicity_criterion(const GradedRingSpec<K>& s, long long n,
                                  long long window = kDefaultWindow) {
    Report r{"simplicity-criterion", Verdict::WINDOWED_PASS, n, n + window};
    detail::PieceCache<K> pc(s);
    Poly<K> acc;
    for (long long i = n; i <= n + window; ++i) {
        Poly<K> lhs = detail::shifted_product(s.line, pc.get(i), i, pc.get(-i));
        Poly<K> rhs = detail::shifted_product(s.line, pc.get(-i), -i, pc.get(i));
        acc = poly_gcd(acc, poly_gcd(lhs, rhs));
        if (acc.is_constant() && !acc.is_zero()) return r;
    }
    r.verdict = Verdict::FAIL;
    r.witness = json{{"n", n}, {"stable_gcd", poly_str(acc)}};
    return r;
}

// Quasi finite generation: g_n = gcd_{1<=i<=r} g_i sigma^i(g_{n-i}) for r < n <= window.
template <class K>
Report check_quasi_fg(const SigmaLine<K>& line, const PieceTable<K>& pieces, long long r_gen,
                      long long window) {
    Report rep{"quasi-finite-generation", Verdict::PASS, r_gen + 1, window};
    if (r_gen < 1) throw MathError("generation radius must be positive");
    for (long long n = r_gen + 1; n <= window; ++n) {
        Poly<K> acc;
        for (long long i = 1; i <= r_gen; ++i) {
            if (!pieces.count(i) || !pieces.count(n - i))
                throw MathError("piece table does not cover the window");
            acc = poly_gcd(acc, detail::shifted_product(line, pieces.at(i), i, pieces.at(n - i)));
        }
        if (!pieces.count(n)) throw MathError("piece table does not cover the window");
        Poly<K> expect = canonical_gen(line, pieces.at(n));
        if (!(acc == expect)) {
            rep.verdict = Verdict::FAIL;
            rep.witness = json{{"n", n}, {"expected", poly_str(expect)}, {"got", poly_str(acc)}};
            return rep;
        }
    }
    return rep;
}

template <class K>
Report check_quasi_fg(const GradedRingSpec<K>& s, long long r_gen, long long window) {
    return check_quasi_fg(s.line, piece_table(s, window), r_gen, window);
}

// Subring closure: g_{m+n} divides g_m sigma^m(g_n) for all |m|, |n| <= window.
template <class K>
Report check_closure(const GradedRingSpec<K>& s, long long window = kDefaultWindow) {
    Report r{"closure", Verdict::PASS, -window, window};
    detail::PieceCache<K> pc(s);
    for (long long m = -window; m <= window; ++m)
        for (long long n = -window; n <= window; ++n) {
            Poly<K> prod = detail::shifted_product(s.line, pc.get(m), m, pc.get(n));
            if (!poly_divides(canonical_gen(s.line, pc.get(m + n)), prod)) {
                r.verdict = Verdict::FAIL;
                r.witness = json{{"m", m}, {"n", n}, {"product", poly_str(prod)},
                                 {"piece", poly_str(pc.get(m + n))}};
                return r;
            }
        }
    return r;
}

// Stable range equality: g_m sigma^m(g_n) = g_{m+n} for m, n >= N and m, n <= -N.
template <class K>
Report check_stable_range(const GradedRingSpec<K>& s, long long span = 6) {
    Report r{"stable-range", Verdict::PASS, s.N, s.N + span};
    detail::PieceCache<K> pc(s);
    for (int sign = 0; sign < 2; ++sign)
        for (long long am = s.N; am <= s.N + span; ++am)
            for (long long an = s.N; an <= s.N + span; ++an) {
                long long m = sign ? -am : am, n = sign ? -an : an;
                Poly<K> prod = detail::shifted_product(s.line, pc.get(m), m, pc.get(n));
                if (!(prod == canonical_gen(s.line, pc.get(m + n)))) {
                    r.verdict = Verdict::FAIL;
                    r.witness = json{{"m", m}, {"n", n}, {"product", poly_str(prod)},
                                     {"piece", poly_str(pc.get(m + n))}};
                    return r;
                }
            }
    return r;
}

// Generation by bounded degrees: the subring generated by pieces of degree
// |i| <= max(2N-1, 1) reaches every g_n with |n| <= window. Reachable ideals
// are relaxed to a gcd fixpoint over all degree splittings.
template <class K>
Report check_generation(const GradedRingSpec<K>& s, long long window = kDefaultWindow) {
    long long m = std::max<long long>(2 * s.N - 1, 1);
    Report r{"generation", Verdict::PASS, -window, window};
    r.witness = json{{"generators_up_to", m}};
    long long R = window + m;
    detail::PieceCache<K> pc(s);
    std::map<long long, std::optional<Poly<K>>> ach;
    for (long long n = -R; n <= R; ++n)
        ach[n] = (n >= -m && n <= m) ? std::optional<Poly<K>>(canonical_gen(s.line, pc.get(n)))
                                     : std::nullopt;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long n = -R; n <= R; ++n)
            for (long long k = -R; k <= R; ++k) {
                long long l = n - k;
                if (l < -R || l > R || !ach[k] || !ach[l]) continue;
                Poly<K> cand = detail::shifted_product(s.line, *ach[k], k, *ach[l]);
                if (!ach[n]) {
                    ach[n] = cand;
                    changed = true;
                } else {
                    Poly<K> g = poly_gcd(*ach[n], cand);
                    if (!(g == *ach[n])) {
                        ach[n] = g;
                        changed = true;
                    }
                }
            }
    }
    for (long long n = -window; n <= window; ++n) {
        Poly<K> expect = canonical_gen(s.line, pc.get(n));
        bool okn = ach[n] && (*ach[n] == expect);
        if (!okn) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"n", n},
                             {"expected", poly_str(expect)},
                             {"reached", ach[n] ? poly_str(*ach[n]) : "none"},
                             {"generators_up_to", m}};
            return r;
        }
    }
    return r;
}

// psi flips B(G,H,J) onto B(G,J,H): compare pieces degree-by-degree.
template <class K>
Report check_psi_duality(const GradedRingSpec<K>& s, long long window = kDefaultWindow) {
    Report r{"psi-duality", Verdict::PASS, -window, window};
    GradedRingSpec<K> flip = make_spec(s.line, s.q, s.G, s.j, s.h, kDefaultSymbolicWindow, false);
    flip.lonely_cert = s.lonely_cert;
    PieceTable<K> lhs = psi_piece_table(s.line, piece_table(s, window));
    PieceTable<K> rhs = piece_table(flip, window);
    for (long long n = -window; n <= window; ++n)
        if (!(lhs.at(n) == rhs.at(n))) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"n", n}, {"psi_piece", poly_str(lhs.at(n))},
                             {"flip_piece", poly_str(rhs.at(n))}};
            return r;
        }
    return r;
}

// Telescoping identity G_m + sigma^{-m}(G_n) = G_{m+n}.
inline Report check_cocycle(const Cycle& G, long long window) {
    Report r{"cocycle", Verdict::PASS, -window, window};
    for (long long m = -window; m <= window; ++m)
        for (long long n = -window; n <= window; ++n)
            if (!(iterate(G, m) + shift(iterate(G, n), -m) == iterate(G, m + n))) {
                r.verdict = Verdict::FAIL;
                r.witness = json{{"m", m}, {"n", n}};
                return r;
            }
    return r;
}

// For pleasantly alternating G every G_n keeps coefficients in {-1, 0, 1}.
inline Report check_coefficient_bounds(const Cycle& G, long long window) {
    Report r{"coefficient-bounds", Verdict::PASS, -window, window};
    for (long long n = -window; n <= window; ++n) {
        Cycle Gn = iterate(G, n);
        for (const auto& [i, v] : Gn.coeffs())
            if (v < -1 || v > 1) {
                r.verdict = Verdict::FAIL;
                r.witness = json{{"n", n}, {"index", i}, {"coefficient", v}};
                return r;
            }
    }
    return r;
}

// min(G_n, sigma^n(G_n)) = 0 for n >= span(G).
inline Report check_min_zero(const Cycle& G, long long window) {
    long long N = G.is_zero() ? 0 : G.span();
    Report r{"min-zero", Verdict::PASS, N, N + window};
    for (long long n = N; n <= N + window; ++n) {
        Cycle Gn = iterate(G, n);
        if (!cyc_min(Gn, shift(Gn, n)).is_zero()) {
            r.verdict = Verdict::FAIL;
            r.witness = json{{"n", n}, {"min", cycle_to_json(cyc_min(Gn, shift(Gn, n)))}};
            return r;
        }
    }
    return r;
}

// Uniform pleasantly alternating cycle: span <= max_span, interior support
// random with the parity fixed so signs can alternate +1 ... +1.
template <class Rng>
Cycle random_pleasant_cycle(Rng& rng, long long max_span) {
    std::uniform_int_distribution<long long> span_d(0, max_span);
    std::uniform_int_distribution<long long> base_d(-max_span, max_span);
    long long s = span_d(rng);
    if (s == 1) s = 0;
    long long base = base_d(rng);
    if (s == 0) return Cycle::Z(base);
    std::vector<long long> interior;
    for (long long i = 1; i < s; ++i)
        if (rng() & 1) interior.push_back(i);
    if (interior.size() % 2 == 0) {
        std::uniform_int_distribution<long long> pick(1, s - 1);
        long long t = pick(rng);
        auto it = std::find(interior.begin(), interior.end(), t);
        if (it == interior.end())
            interior.insert(std::lower_bound(interior.begin(), interior.end(), t), t);
        else
            interior.erase(it);
    }
    Cycle G;
    long long sign = 1;
    G.set_coeff(base, sign);
    for (long long i : interior) {
        sign = -sign;
        G.set_coeff(base + i, sign);
    }
    G.set_coeff(base + s, 1);
    return G;
}

// Support cycle sequence along the orbit of q: F_n[i] = exponent of
// sigma^i(q) in g_n, E_n its reduction to multiplicity one.
struct SupportSequence {
    long long window = 0;
    std::map<long long, std::pair<Cycle, Cycle>> entries;  // n -> (F_n, E_n)
};

template <class K>
SupportSequence support_cycle_sequence(const SigmaLine<K>& line, const PieceTable<K>& pieces,
                                       const Poly<K>& q, long long window,
                                       long long incidence_window = kDefaultSymbolicWindow) {
    SupportSequence seq;
    seq.window = window;
    for (long long n = -window; n <= window; ++n) {
        if (!pieces.count(n)) throw MathError("piece table does not cover the window");
        const Poly<K>& g = pieces.at(n);
        Cycle F;
        if (!g.is_constant()) {
            Incidence inc = orbit_incidence(line, g, q, incidence_window);
            if (inc.cert != Cert::CERTIFIED)
                throw MathError(
                    "orbit incidence is not certified: enlarge the window or use rational "
                    "parameters");
            for (long long i : inc.indices) F.set_coeff(i, multiplicity(line, g, q, i));
        }
        seq.entries[n] = {F, cyc_cap(F, 1)};
    }
    return seq;
}

template <class K>
SupportSequence support_cycle_sequence(const GradedRingSpec<K>& s, long long window) {
    return support_cycle_sequence(s.line, piece_table(s, window), s.q, window);
}

// E_n must match |G_n| (case I), (G_n)+ (case II) or (-G_n)+ (case III)
// across the whole window.
inline Report check_trichotomy(const SupportSequence& seq, const Cycle& G) {
    Report r{"trichotomy", Verdict::PASS, -seq.window, seq.window};
    const char* names[3] = {"I", "II", "III"};
    std::optional<long long> first_fail[3];
    for (const auto& [n, fe] : seq.entries) {
        Cycle Gn = iterate(G, n);
        const Cycle& E = fe.second;
        Cycle want[3] = {cyc_abs(Gn), pos_part(Gn), pos_part(-Gn)};
        for (int c = 0; c < 3; ++c)
            if (!first_fail[c] && !(E == want[c])) first_fail[c] = n;
    }
    for (int c = 0; c < 3; ++c)
        if (!first_fail[c]) {
            r.witness = json{{"case", names[c]}};
            return r;
        }
    r.verdict = Verdict::FAIL;
    r.witness = json{{"first_mismatch",
                      json{{"I", *first_fail[0]}, {"II", *first_fail[1]}, {"III", *first_fail[2]}}}};
    return r;
}

// Inverse of (G, Omega) -> E_n = iterate(G, n) - Omega on a stabilized tail:
// consecutive differences recover sigma^{-n}(G), then Omega must be constant
// and effective over the rest of the window.
struct RecoverResult {
    Cycle G;
    Cycle omega;
    long long stable_from = 0;
};

inline RecoverResult recover_cycle_data(const std::map<long long, Cycle>& E) {
    if (E.size() < 3) throw MathError("need at least three consecutive entries");
    long long n0 = E.begin()->first, n1 = E.rbegin()->first;
    if ((long long)E.size() != n1 - n0 + 1) throw MathError("entries must be consecutive");
    for (long long m = n0; m + 2 <= n1; ++m) {
        Cycle G = shift(E.at(m + 1) - E.at(m), m);
        bool ok = true;
        for (long long k = m; k + 1 <= n1 && ok; ++k)
            if (!(shift(E.at(k + 1) - E.at(k), k) == G)) ok = false;
        if (!ok) continue;
        Cycle omega = iterate(G, m) - E.at(m);
        for (long long k = m; k <= n1 && ok; ++k)
            if (!(iterate(G, k) - E.at(k) == omega)) ok = false;
        if (!ok || !is_effective(omega)) continue;
        return RecoverResult{G, omega, m};
    }
    throw MathError("sequence not stabilized");
}

}  // namespace gwb
