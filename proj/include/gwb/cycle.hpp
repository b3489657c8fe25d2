#pragma once

#include <map>
#include <vector>

#include "gwb/error.hpp"

namespace gwb {

// Finite integer combination sum a_i * Z_i of orbit translates, indexed over Z.
// Sparse; no zero coefficients stored.
class Cycle {
public:
    using Map = std::map<long long, long long>;

    Cycle() = default;

    static Cycle Z(long long i) {
        Cycle c;
        c.c_[i] = 1;
        return c;
    }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long coeff(long long i) const {
        auto it = c_.find(i);
        return it == c_.end() ? 0 : it->second;
    }
    void set_coeff(long long i, long long v) {
        if (v == 0)
            c_.erase(i);
        else
            c_[i] = v;
    }
    long long min_index() const {
        if (c_.empty()) throw MathError("support of zero cycle");
        return c_.begin()->first;
    }
    long long max_index() const {
        if (c_.empty()) throw MathError("support of zero cycle");
        return c_.rbegin()->first;
    }
    // Width of the support interval; 0 for a single translate.
    long long span() const { return c_.empty() ? 0 : max_index() - min_index(); }
    long long coeff_sum() const {
        long long s = 0;
        for (const auto& [i, v] : c_) s += v;
        return s;
    }

    Cycle& operator+=(const Cycle& o) {
        for (const auto& [i, v] : o.c_) add(i, v);
        return *this;
    }
    Cycle& operator-=(const Cycle& o) {
        for (const auto& [i, v] : o.c_) add(i, -v);
        return *this;
    }
    friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
    friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
    Cycle operator-() const {
        Cycle r;
        for (const auto& [i, v] : c_) r.c_[i] = -v;
        return r;
    }
    friend Cycle operator*(long long s, const Cycle& c) {
        Cycle r;
        if (s == 0) return r;
        for (const auto& [i, v] : c.c_) r.c_[i] = s * v;
        return r;
    }

    bool operator==(const Cycle& o) const { return c_ == o.c_; }
    bool operator!=(const Cycle& o) const { return !(*this == o); }

private:
    void add(long long i, long long v) {
        auto it = c_.find(i);
        if (it == c_.end()) {
            if (v != 0) c_[i] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Map c_;
};

// sigma^j acting on cycles: the coefficient of Z_i in sigma^j(C) is C[i + j].
inline Cycle shift(const Cycle& c, long long j) {
    Cycle r;
    for (const auto& [i, v] : c.coeffs()) r.set_coeff(i - j, v);
    return r;
}

// G_n: 0 for n = 0; G + sigma^-1(G) + ... + sigma^-(n-1)(G) for n >= 1;
// -sigma(G) - ... - sigma^|n|(G) for n <= -1.
inline Cycle iterate(const Cycle& g, long long n) {
    Cycle acc;
    if (n >= 1) {
        for (long long k = 0; k < n; ++k) acc += shift(g, -k);
    } else if (n <= -1) {
        for (long long k = 1; k <= -n; ++k) acc -= shift(g, k);
    }
    return acc;
}

inline Cycle cyc_min(const Cycle& a, const Cycle& b) {
    Cycle r;
    for (const auto& [i, v] : a.coeffs()) r.set_coeff(i, std::min(v, b.coeff(i)));
    for (const auto& [i, v] : b.coeffs()) r.set_coeff(i, std::min(v, a.coeff(i)));
    return r;
}

inline Cycle cyc_max(const Cycle& a, const Cycle& b) {
    Cycle r;
    for (const auto& [i, v] : a.coeffs()) r.set_coeff(i, std::max(v, b.coeff(i)));
    for (const auto& [i, v] : b.coeffs()) r.set_coeff(i, std::max(v, a.coeff(i)));
    return r;
}

inline Cycle pos_part(const Cycle& c) { return cyc_max(c, Cycle()); }

inline Cycle cyc_abs(const Cycle& c) {
    Cycle r;
    for (const auto& [i, v] : c.coeffs()) r.set_coeff(i, v < 0 ? -v : v);
    return r;
}

// Truncate every coefficient to at most `cap` (componentwise min with cap on
// the support); used for reduced support cycles.
inline Cycle cyc_cap(const Cycle& c, long long cap) {
    Cycle r;
    for (const auto& [i, v] : c.coeffs()) r.set_coeff(i, std::min(v, cap));
    return r;
}

inline bool is_effective(const Cycle& c) {
    for (const auto& [i, v] : c.coeffs())
        if (v < 0) return false;
    return true;
}

// Nonzero coefficients are all +-1, strictly alternate in sign along the
// support, and both endpoints are +1.
inline bool is_pleasantly_alternating(const Cycle& c) {
    if (c.is_zero()) return false;
    int expect = 1;
    for (const auto& [i, v] : c.coeffs()) {
        if (v != expect) return false;
        expect = -expect;
    }
    // Odd count of alternating entries starting at +1 ends at +1.
    return c.coeffs().rbegin()->second == 1;
}

struct ClassifyResult {
    enum class Kind { PINNED, ALTERNATING_MULTIPLE } kind;
    // PINNED: index i with Z_i <= min(G_n, sigma^n(G_n)) for all n >= N.
    long long pinned_index = 0;
    // ALTERNATING_MULTIPLE: G = multiple * base, base pleasantly alternating.
    long long multiple = 0;
    Cycle base;
    long long stable_from = 0;  // N = span of G
};

// Classify an integer cycle whose iterates G_n are effective for all large n:
// either some translate is pinned inside min(G_n, sigma^n(G_n)) for n >= N, or
// G is a nonnegative multiple of a pleasantly alternating cycle and that min
// vanishes. The closed form for G_n (n >= N) makes the dichotomy exact; the
// window re-verifies it by brute force.
inline ClassifyResult classify_sequence(const Cycle& g, long long window = 16) {
    ClassifyResult out{};
    if (g.is_zero()) {
        out.kind = ClassifyResult::Kind::ALTERNATING_MULTIPLE;
        out.multiple = 0;
        out.base = Cycle::Z(0);
        out.stable_from = 0;
        return out;
    }
    const long long r = g.min_index();
    const long long N = g.span();
    out.stable_from = N;
    // Shift support to start at 0; d_i / e_i are the prefix/suffix sums that
    // appear as the coefficients of G_n for n >= N.
    std::vector<long long> coef(static_cast<size_t>(N) + 1, 0);
    for (const auto& [i, v] : g.coeffs()) coef[static_cast<size_t>(i - r)] = v;
    const long long d = g.coeff_sum();
    std::vector<long long> dpre(static_cast<size_t>(N), 0);
    long long run = 0;
    for (long long i = 0; i < N; ++i) {
        run += coef[static_cast<size_t>(i)];
        dpre[static_cast<size_t>(i)] = run;
    }
    auto hypothesis_violated = [&]() {
        return json{{"cycle_span", N}, {"total", d}};
    };
    if (d < 0) throw MathError("hypothesis violated: iterates not eventually effective", hypothesis_violated());
    for (long long i = 0; i < N; ++i) {
        long long di = dpre[static_cast<size_t>(i)];
        long long ei = d - di;
        if (di < 0 || ei < 0)
            throw MathError("hypothesis violated: iterates not eventually effective", hypothesis_violated());
    }
    // Window re-verification of effectivity, exact on [N, N+window].
    for (long long n = N; n <= N + window; ++n)
        if (!is_effective(iterate(g, n)))
            throw MathError("hypothesis violated: iterates not eventually effective", json{{"degree", n}});

    for (long long i = 0; i < N; ++i) {
        long long di = dpre[static_cast<size_t>(i)];
        long long ei = d - di;
        if (di > 0 && ei > 0) {
            out.kind = ClassifyResult::Kind::PINNED;
            out.pinned_index = r + i;
            // Re-validate the pin over the window.
            for (long long n = N; n <= N + window; ++n) {
                Cycle m = cyc_min(iterate(g, n), shift(iterate(g, n), n));
                if (m.coeff(r + i) < 1)
                    throw MathError("pinned index failed window validation", json{{"degree", n}, {"index", r + i}});
            }
            return out;
        }
    }
    // No pin: every d_i is 0 or d, so G is d times a pleasantly alternating
    // cycle (d = 0 forces G = 0, handled above).
    out.kind = ClassifyResult::Kind::ALTERNATING_MULTIPLE;
    out.multiple = d;
    if (d == 0) throw MathError("degenerate classification: zero total on nonzero cycle");
    Cycle base;
    for (const auto& [i, v] : g.coeffs()) {
        if (v % d != 0) throw MathError("classification failed: coefficient not divisible by total",
                                        json{{"index", i}, {"coefficient", v}, {"total", d}});
        base.set_coeff(i, v / d);
    }
    if (!is_pleasantly_alternating(base))
        throw MathError("classification failed: base not pleasantly alternating");
    out.base = base;
    // Re-validate min(G_n, sigma^n(G_n)) = 0 over the window.
    for (long long n = N; n <= N + window; ++n) {
        Cycle m = cyc_min(iterate(g, n), shift(iterate(g, n), n));
        if (!m.is_zero())
            throw MathError("alternating classification failed window validation", json{{"degree", n}});
    }
    return out;
}

}  // namespace gwb
