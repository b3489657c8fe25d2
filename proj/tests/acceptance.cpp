// Acceptance suite: ten pinned scenario families with wall-clock budgets.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gwb/serde.hpp"
#include "gwb/verify.hpp"
#include "helpers.hpp"

using namespace gwb;

namespace {

const SigmaLine<Rat> kAdd = additive_line();
const SigmaLine<Rat> kMult = multiplicative_line(Rat(2));

std::string g_note;

void note(const std::string& s) {
    if (g_note.empty()) g_note = s;
}

// 1. Cycle lemma suite: cocycle, coefficient bounds, min-zero on 500 random
// pleasantly alternating cycles of span <= 8, all |m|, |n| <= 20.
bool criterion1() {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 500; ++k) {
        Cycle G = random_pleasant_cycle(rng, 8);
        std::map<long long, Cycle> it;
        for (long long n = -40; n <= 40; ++n) it[n] = iterate(G, n);
        for (long long m = -20; m <= 20; ++m)
            for (long long n = -20; n <= 20; ++n)
                if (!(it[m] + shift(it[n], -m) == it[m + n])) {
                    note("cocycle identity failed at m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " G=" + cycle_str(G));
                    return false;
                }
        for (long long n = -20; n <= 20; ++n)
            for (const auto& [i, v] : it[n].coeffs())
                if (v < -1 || v > 1) {
                    note("coefficient bound failed at n=" + std::to_string(n));
                    return false;
                }
        long long N = G.span();
        for (long long n = N; n <= N + 20; ++n)
            if (!cyc_min(it[n], shift(it[n], n)).is_zero()) {
                note("min-zero failed at n=" + std::to_string(n) + " G=" + cycle_str(G));
                return false;
            }
    }
    return true;
}

// 2. Converse classification, exhaustive over coefficients in [-2,2] on
// support {0..4}, restricted to cycles whose iterates stay effective on
// [N, N+16]; every claim re-validated by brute force.
bool criterion2() {
    long long checked = 0;
    for (long long mask = 0; mask < 3125; ++mask) {
        long long rem = mask;
        Cycle G;
        for (long long i = 0; i <= 4; ++i) {
            G.set_coeff(i, rem % 5 - 2);
            rem /= 5;
        }
        long long N = G.is_zero() ? 0 : G.span();
        bool effective = true;
        for (long long n = N; n <= N + 16 && effective; ++n)
            effective = is_effective(iterate(G, n));
        if (!effective) continue;
        ++checked;
        ClassifyResult r = classify_sequence(G, 16);
        if (r.kind == ClassifyResult::Kind::ALTERNATING_MULTIPLE) {
            if (!(G == r.multiple * r.base) || r.multiple < 0 ||
                (!G.is_zero() && !is_pleasantly_alternating(r.base))) {
                note("multiple claim wrong for G=" + cycle_str(G));
                return false;
            }
            for (long long n = N; n <= N + 16; ++n) {
                Cycle Gn = iterate(G, n);
                if (!cyc_min(Gn, shift(Gn, n)).is_zero()) {
                    note("min not zero for alternating G=" + cycle_str(G));
                    return false;
                }
            }
        } else {
            for (long long n = N; n <= N + 16; ++n) {
                Cycle Gn = iterate(G, n);
                if (cyc_min(Gn, shift(Gn, n)).coeff(r.pinned_index) < 1) {
                    note("pinned claim wrong for G=" + cycle_str(G));
                    return false;
                }
            }
        }
    }
    if (checked < 100) {
        note("exhaustive family unexpectedly small: " + std::to_string(checked));
        return false;
    }
    return true;
}

// 3. The basic additive algebra: xy - yx = 1 and lowering pieces equal the
// y-power coefficients through degree 12.
bool criterion3() {
    GwaEmbedding<Rat> emb = gwa_embed(kAdd, P("u"));
    SkewElement<Rat> one{LaurentPoly<Rat>(1)};
    if (!(skew_mul(kAdd, emb.x, emb.y) - skew_mul(kAdd, emb.y, emb.x) == one)) {
        note("commutator is not 1");
        return false;
    }
    SkewElement<Rat> yn = one;
    for (long long n = 1; n <= 12; ++n) {
        yn = skew_mul(kAdd, yn, emb.y);
        if (yn.terms().size() != 1 ||
            !(yn.coeff(-n) == LaurentPoly<Rat>(piece_generator(emb.specs[0], -n)))) {
            note("y^" + std::to_string(n) + " does not match the piece generator");
            return false;
        }
    }
    return true;
}

GradedRingSpec<Rat> random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> root(-4, 4), ppow(0, 2), kind(0, 2);
    Cycle G = random_pleasant_cycle(rng, 4);
    long long which = kind(rng);
    SigmaLine<Rat> line = which == 2 ? kMult : kAdd;
    Poly<Rat> q;
    if (which == 0) {
        q = P("u") - Poly<Rat>(Rat(static_cast<long>(root(rng))));
    } else if (which == 1) {
        Rat a(static_cast<long>(root(rng)));
        q = (P("u") - Poly<Rat>(a)) * (P("u") - Poly<Rat>(a + Rat(1, 2)));
    } else {
        long long a = root(rng);
        if (a == 0) a = 1;
        q = P("u") - Poly<Rat>(Rat(static_cast<long>(a)));
    }
    long long al = ppow(rng), be = ppow(rng);
    return make_spec(line, q, G, q.pow(al), q.pow(be));
}

// 4. Ring-axiom certification on 100 random specs: closure on |m|,|n| <= 12,
// stable range and comaximality on [N, N+6], generation up to max(2N-1, 1).
bool criterion4() {
    std::mt19937_64 rng(104);
    for (int k = 0; k < 100; ++k) {
        GradedRingSpec<Rat> s = random_spec(rng);
        for (const Report& r :
             {check_closure(s, 12), check_stable_range(s, 6),
              check_comaximality(s, s.N, s.N + 6), check_generation(s, 6)}) {
            if (!r.ok()) {
                note(r.check + " failed on spec " + spec_to_json(s).dump() + " witness " +
                     r.witness.dump());
                return false;
            }
        }
    }
    return true;
}

SkewElement<Rat> random_skew(std::mt19937_64& rng, bool laurent) {
    std::uniform_int_distribution<long long> tdeg(-3, 3), cdeg(laurent ? -3 : 0, 3), coef(-4, 4);
    SkewElement<Rat> a;
    for (int k = 0; k < 3; ++k) {
        LaurentPoly<Rat> c;
        c.set_coeff(cdeg(rng), Rat(static_cast<long>(coef(rng))));
        c.set_coeff(0, Rat(static_cast<long>(coef(rng))));
        a = a + SkewElement<Rat>::monomial(c, tdeg(rng));
    }
    return a;
}

// 5. The degree-flip anti-isomorphism: product reversal on 200 random pairs
// and piece equality with the swapped spec on window +-10 for 20 specs.
bool criterion5() {
    std::mt19937_64 rng(105);
    for (int k = 0; k < 200; ++k) {
        bool mult = k % 2;
        const SigmaLine<Rat>& line = mult ? kMult : kAdd;
        SkewElement<Rat> a = random_skew(rng, mult), b = random_skew(rng, mult);
        if (!(apply_psi(line, skew_mul(line, a, b)) ==
              skew_mul(line, apply_psi(line, b), apply_psi(line, a)))) {
            note("product reversal failed at pair " + std::to_string(k));
            return false;
        }
    }
    for (int k = 0; k < 20; ++k) {
        GradedRingSpec<Rat> s = random_spec(rng);
        Report r = check_psi_duality(s, 10);
        if (!r.ok()) {
            note("piece flip failed on spec " + spec_to_json(s).dump());
            return false;
        }
    }
    return true;
}

// 6. Endomorphism rings of profile modules match the graded ring of the
// profile cycle for every S in {0,1,2,3} and h in {u, u^2}, window +-8.
bool criterion6() {
    for (long long mask = 0; mask < 16; ++mask) {
        std::set<long long> S;
        for (long long i = 0; i < 4; ++i)
            if (mask & (1 << i)) S.insert(i);
        for (const char* hs : {"u", "u^2"}) {
            GradedRingSpec<Rat> s = make_spec(kAdd, P("u"), cycle_from_S(S), P(hs), P("1"));
            Report r = check_morita(s, 8);
            if (!r.ok()) {
                note("morita failed for mask " + std::to_string(mask) + " h=" + hs +
                     " witness " + r.witness.dump());
                return false;
            }
        }
    }
    return true;
}

// 7. Trichotomy: (h,j) = (q,q), (1,q), (q,1) land in cases I, II, III on
// window +-10 for 20 random cycles over both ring types.
bool criterion7() {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 20; ++k) {
        Cycle G = random_pleasant_cycle(rng, 4);
        for (int ring = 0; ring < 2; ++ring) {
            const SigmaLine<Rat>& line = ring ? kMult : kAdd;
            Poly<Rat> q = ring ? P("u-1") : P("u");
            struct Shape {
                Poly<Rat> h, j;
                const char* want;
            } shapes[3] = {{q, q, "I"}, {P("1"), q, "II"}, {q, P("1"), "III"}};
            for (const auto& sh : shapes) {
                GradedRingSpec<Rat> s = make_spec(line, q, G, sh.h, sh.j);
                Report r = check_trichotomy(support_cycle_sequence(s, 10), s.G);
                if (!r.ok() || r.witness.at("case") != sh.want) {
                    note(std::string("expected case ") + sh.want + " for G=" + cycle_str(G) +
                         " got " + r.witness.dump());
                    return false;
                }
            }
        }
    }
    return true;
}

// 8. Divisor-sequence recovery: exact on 100 constructed (G, Omega) pairs,
// rejection of 100 sequences perturbed in the final entry.
bool criterion8() {
    std::mt19937_64 rng(108);
    std::uniform_int_distribution<long long> coef(-3, 3), eff(0, 3), base(-3, 3), idx(-2, 8);
    for (int k = 0; k < 200; ++k) {
        Cycle G, omega;
        for (long long i = 0; i <= 3; ++i) {
            G.set_coeff(i + base(rng) % 2, coef(rng));
            omega.set_coeff(i - 1, eff(rng));
        }
        long long n0 = base(rng);
        std::map<long long, Cycle> E;
        for (long long n = n0; n < n0 + 8; ++n) E[n] = iterate(G, n) - omega;
        if (k < 100) {
            RecoverResult r = recover_cycle_data(E);
            if (!(r.G == G) || !(r.omega == omega)) {
                note("recovery mismatch for G=" + cycle_str(G));
                return false;
            }
        } else {
            E[n0 + 7] += Cycle::Z(idx(rng));
            bool threw = false;
            try {
                recover_cycle_data(E);
            } catch (const MathError&) {
                threw = true;
            }
            if (!threw) {
                note("perturbed sequence accepted for G=" + cycle_str(G));
                return false;
            }
        }
    }
    return true;
}

// Factor-enumeration oracle: f stays lonely iff no shift |n| <= 2 bound with
// n != 0 shares a factor with f.
bool lonely_oracle(const SigmaLine<Rat>& line, const Poly<Rat>& f, long long bound,
                   std::optional<long long>* found) {
    for (long long n = 1; n <= 2 * bound; ++n)
        for (long long sgn : {1LL, -1LL}) {
            if (!poly_gcd(f, apply_sigma(line, f, sgn * n)).is_constant()) {
                *found = sgn * n;
                return false;
            }
        }
    return true;
}

// 9. Lonely decisions agree with the brute-force oracle on 200 random
// rational-root inputs per ring type; pinned multivariate cases; every
// not-lonely witness re-validates.
bool criterion9() {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long long> nfac(1, 4), num(-6, 6), den(1, 3), odd(0, 3),
        expo(-2, 2);
    for (int k = 0; k < 400; ++k) {
        bool mult = k % 2;
        const SigmaLine<Rat>& line = mult ? kMult : kAdd;
        Poly<Rat> f(1);
        long long m = nfac(rng);
        for (long long i = 0; i < m; ++i) {
            Rat root = mult ? Rat(static_cast<long>(2 * odd(rng) + 1)) *
                                  field_pow(Rat(2), expo(rng))
                            : Rat(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
            root.canonicalize();
            f = f * (Poly<Rat>::var() - Poly<Rat>(root));
        }
        LonelyVerdict v = lonely_on_line(line, f);
        if (v.cert != Cert::CERTIFIED) {
            note("rational input not certified: " + poly_str(f));
            return false;
        }
        std::optional<long long> oracle_shift;
        bool oracle = lonely_oracle(line, f, v.bound, &oracle_shift);
        if (oracle != v.lonely) {
            note("oracle disagrees on " + poly_str(f));
            return false;
        }
        if (!v.lonely) {
            if (!v.witness_shift ||
                poly_gcd(f, apply_sigma(line, f, *v.witness_shift)).is_constant()) {
                note("witness does not re-validate on " + poly_str(f));
                return false;
            }
        }
    }
    Torus<Rat> t = make_torus<Rat>(false, {Rat(2), Rat(3)});
    MultiPoly<Rat> f1 = to_multipoly<Rat>(parse_expression("1 + x2 + x3"), t);
    LonelyVerdict v1 = is_lonely(t, f1);
    if (v1.lonely || !v1.witness_point || !validate_lonely_witness(t, f1, v1)) {
        note("two-coordinate plane case lacks a validated witness");
        return false;
    }
    MultiPoly<Rat> f2 = to_multipoly<Rat>(parse_expression("1 + x2*x3"), t);
    if (!is_lonely(t, f2).lonely) {
        note("collinear binomial case should be lonely");
        return false;
    }
    return true;
}

// 10. Negative control: a non-lonely orbit (two translates multiplied
// together) breaks comaximality inside [N, N+6] with a visible common factor.
bool criterion10() {
    GwaEmbedding<Rat> emb = gwa_embed(kAdd, P("u*(u-1)"), kDefaultSymbolicWindow, false);
    const GradedRingSpec<Rat>& s = emb.specs[0];
    Report r = check_comaximality(s, s.N, s.N + 6);
    if (r.verdict != Verdict::FAIL) {
        note("comaximality unexpectedly held");
        return false;
    }
    long long n = r.witness.at("n").get<long long>();
    Poly<Rat> g = P(r.witness.at("common_factor").get<std::string>());
    if (n > s.N + 6 || g.is_constant()) {
        note("failure witness malformed: " + r.witness.dump());
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        bool (*fn)();
        double budget_s;
    } rows[] = {
        {"criterion 1", criterion1, 10.0},  {"criterion 2", criterion2, 30.0},
        {"criterion 3", criterion3, 1.0},   {"criterion 4", criterion4, 60.0},
        {"criterion 5", criterion5, 10.0},  {"criterion 6", criterion6, 30.0},
        {"criterion 7", criterion7, 20.0},  {"criterion 8", criterion8, 5.0},
        {"criterion 9", criterion9, 30.0},  {"criterion 10", criterion10, 5.0},
    };
    int failures = 0;
    for (const Row& row : rows) {
        g_note.clear();
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = row.fn();
        } catch (const Error& e) {
            note(std::string("threw: ") + e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt >= row.budget_s) {
            ok = false;
            note("time budget " + std::to_string(row.budget_s) + "s exceeded");
        }
        if (!ok) ++failures;
        std::printf("%s: %s (%.2fs)%s%s\n", row.name, ok ? "PASS" : "FAIL", dt,
                    g_note.empty() ? "" : " ", g_note.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
