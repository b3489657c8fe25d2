#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gwb/sigma.hpp"

namespace gwb {

template <class K>
K k_of_rat(const Rat& r) {
    if constexpr (std::is_same_v<K, Rat>)
        return r;
    else
        return K(Poly<Rat>(r));
}

// Polynomial on a torus with an optional additive first coordinate:
// exponent vectors are arbitrary integers on multiplicative coordinates and
// nonnegative on the additive one.
template <class K>
class MultiPoly {
public:
    using Expo = std::vector<long long>;

    explicit MultiPoly(long long dim = 0) : dim_(dim) {}

    long long dim() const { return dim_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && is_zero_vec(c_.begin()->first));
    }
    const std::map<Expo, K>& coeffs() const { return c_; }

    K coeff(const Expo& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? K(0) : it->second;
    }

    void add_term(const Expo& e, const K& v) {
        if ((long long)e.size() != dim_) throw MathError("exponent dimension mismatch");
        auto it = c_.find(e);
        K nv = (it == c_.end() ? K(0) : it->second) + v;
        if (it != c_.end()) c_.erase(it);
        if (!(nv == K(0))) c_.emplace(e, nv);
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(dim_);
        for (const auto& [e, v] : c_) r.c_.emplace(e, K(0) - v);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        if (dim_ != o.dim_) throw MathError("dimension mismatch");
        MultiPoly r(dim_);
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) {
                Expo e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, v1 * v2);
            }
        return r;
    }
    MultiPoly scaled(const K& s) const {
        MultiPoly r(dim_);
        if (s == K(0)) return r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, v * s);
        return r;
    }
    bool operator==(const MultiPoly& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    bool uses_coord(long long i) const {
        for (const auto& [e, v] : c_)
            if (e[i] != 0) return true;
        return false;
    }

    K eval(const std::vector<K>& at) const {
        if ((long long)at.size() != dim_) throw MathError("evaluation dimension mismatch");
        K acc(0);
        for (const auto& [e, v] : c_) {
            K t = v;
            bool dead = false;
            for (size_t i = 0; i < e.size() && !dead; ++i) {
                if (e[i] == 0) continue;
                if (at[i] == K(0)) {
                    if (e[i] < 0) throw MathError("zero coordinate with negative exponent");
                    dead = true;
                } else {
                    t = t * field_pow(at[i], e[i]);
                }
            }
            if (!dead) acc = acc + t;
        }
        return acc;
    }

private:
    static bool is_zero_vec(const Expo& e) {
        for (long long x : e)
            if (x != 0) return false;
        return true;
    }

    long long dim_ = 0;
    std::map<Expo, K> c_;
};

// Torus with automorphism sigma: optional additive coordinate x1 with
// sigma(x1) = x1 + 1, then multiplicative coordinates x2..x_{m+1} with
// sigma(x_j) = p_j x_j. Parameters must generate a free abelian group.
template <class K>
struct Torus {
    bool has_additive = false;
    std::vector<K> params;

    long long mult_offset() const { return has_additive ? 1 : 0; }
    long long dim() const { return mult_offset() + (long long)params.size(); }
};

namespace detail {

// Pairwise coprime set over which every input factors exactly.
inline std::vector<Int> coprime_base(const std::vector<Int>& xs) {
    std::vector<Int> pool;
    for (const Int& x : xs) {
        Int a = abs(x);
        if (a > 1) pool.push_back(a);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (size_t a = 0; a < pool.size() && !changed; ++a)
            for (size_t b = a + 1; b < pool.size() && !changed; ++b) {
                Int g = gcd(pool[a], pool[b]);
                if (g > 1) {
                    Int qa = pool[a] / g, qb = pool[b] / g;
                    std::vector<Int> next;
                    for (size_t t = 0; t < pool.size(); ++t)
                        if (t != a && t != b) next.push_back(pool[t]);
                    next.push_back(g);
                    if (qa > 1) next.push_back(qa);
                    if (qb > 1) next.push_back(qb);
                    pool.swap(next);
                    changed = true;
                }
            }
    }
    return pool;
}

inline long long ord_over(Int v, const Int& b) {
    long long k = 0;
    while (v % b == 0) {
        v /= b;
        ++k;
    }
    return k;
}

// Nonzero rational x with A x = 0, or nullopt when the kernel is trivial.
inline std::optional<std::vector<Rat>> kernel_vector(std::vector<std::vector<Rat>> A, long long cols) {
    long long rows = (long long)A.size();
    std::vector<long long> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    long long r = 0;
    for (long long c = 0; c < cols && r < rows; ++c) {
        long long pr = -1;
        for (long long i = r; i < rows; ++i)
            if (!(A[i][c] == Rat(0))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[r], A[pr]);
        Rat inv = Rat(1) / A[r][c];
        for (long long j = 0; j < cols; ++j) A[r][j] *= inv;
        for (long long i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == Rat(0)) continue;
            Rat f = A[i][c];
            for (long long j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        is_pivot[c] = true;
        pivot_cols.push_back(c);
        ++r;
    }
    long long freec = -1;
    for (long long c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            freec = c;
            break;
        }
    if (freec < 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    x[freec] = Rat(1);
    for (size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -A[i][freec];
    return x;
}

}  // namespace detail

// Nontrivial integer relation prod params[i]^{n_i} = 1 if one exists.
// Exact for rational parameters and for symbolic monomials c*p^g; nullopt
// otherwise records the free-abelian assumption as a declared hypothesis.
template <class K>
std::optional<std::vector<Int>> free_abelian_relation(const std::vector<K>& params) {
    size_t m = params.size();
    if (m == 0) return std::nullopt;
    std::vector<Rat> cpart(m);
    std::vector<long long> gexp(m, 0);
    bool symbolic = false;
    if constexpr (std::is_same_v<K, Rat>) {
        cpart = params;
    } else {
        symbolic = true;
        for (size_t i = 0; i < m; ++i) {
            auto mono = ratfunc_as_monomial(params[i]);
            if (!mono) return std::nullopt;
            cpart[i] = mono->first;
            gexp[i] = mono->second;
        }
    }
    std::vector<Int> vals;
    for (const Rat& c : cpart) {
        vals.push_back(c.get_num());
        vals.push_back(c.get_den());
    }
    std::vector<Int> base = detail::coprime_base(vals);
    long long cols = (long long)base.size() + (symbolic ? 1 : 0);
    // Left kernel of the exponent matrix = kernel of its transpose.
    std::vector<std::vector<Rat>> At(cols, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < base.size(); ++j) {
            long long e = detail::ord_over(abs(cpart[i].get_num()), base[j]) -
                          detail::ord_over(cpart[i].get_den(), base[j]);
            At[j][i] = Rat((long)e);
        }
        if (symbolic) At[base.size()][i] = Rat((long)gexp[i]);
    }
    auto ker = detail::kernel_vector(At, (long long)m);
    if (!ker) return std::nullopt;
    Int den_lcm = 1;
    for (const Rat& x : *ker) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        den_lcm = l;
    }
    std::vector<Int> n(m);
    Int g = 0;
    for (size_t i = 0; i < m; ++i) {
        Rat v = (*ker)[i] * Rat(den_lcm);
        n[i] = v.get_num();
        g = gcd(g, n[i]);
    }
    for (Int& x : n) x /= g;
    Rat prod(1);
    for (size_t i = 0; i < m; ++i) prod *= rat_pow(cpart[i], n[i].get_si());
    if (prod == Rat(-1))
        for (Int& x : n) x *= 2;
    return n;
}

template <class K>
Torus<K> make_torus(bool has_additive, std::vector<K> params) {
    if constexpr (!std::is_same_v<K, Rat>) {
        if (has_additive) throw MathError("additive coordinate requires rational coefficients");
    }
    if (!has_additive && params.empty()) throw MathError("torus needs at least one coordinate");
    for (const K& p : params)
        if (p == K(0)) throw MathError("torus parameter must be nonzero");
    if (auto rel = free_abelian_relation(params)) {
        json w = json::array();
        for (const Int& x : *rel) w.push_back(x.get_str());
        throw MathError("torus parameters admit a multiplicative relation", json{{"relation", w}});
    }
    return Torus<K>{has_additive, std::move(params)};
}

// sigma on the torus: x1 -> x1 + m (binomial expansion), x_j -> p_j^m x_j.
template <class K>
MultiPoly<K> apply_sigma(const Torus<K>& t, const MultiPoly<K>& f, long long m) {
    if ((long long)f.dim() != t.dim()) throw MathError("dimension mismatch");
    if (m == 0) return f;
    long long off = t.mult_offset();
    MultiPoly<K> r(f.dim());
    for (const auto& [e, c] : f.coeffs()) {
        K scale = c;
        for (size_t j = 0; j < t.params.size(); ++j)
            if (e[off + j] != 0) scale = scale * field_pow(t.params[j], m * e[off + j]);
        if (t.has_additive && e[0] > 0) {
            long long e1 = e[0];
            for (long long k = 0; k <= e1; ++k) {
                Int bin;
                mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)e1, (unsigned long)k);
                Int sh;
                Int mb(static_cast<long>(m));
                mpz_pow_ui(sh.get_mpz_t(), mb.get_mpz_t(), (unsigned long)(e1 - k));
                typename MultiPoly<K>::Expo ek = e;
                ek[0] = k;
                r.add_term(ek, scale * k_of_rat<K>(Rat(bin * sh)));
            }
        } else {
            r.add_term(e, scale);
        }
    }
    return r;
}

// Divide by the lex-least support monomial's unit part (multiplicative
// coordinates and the scalar), so the support contains the zero vector
// whenever the additive coordinate allows it.
template <class K>
MultiPoly<K> unit_normalize(const Torus<K>& t, const MultiPoly<K>& f) {
    if (f.is_zero()) return f;
    const auto& s0 = f.coeffs().begin()->first;
    const K c0 = f.coeffs().begin()->second;
    long long off = t.mult_offset();
    MultiPoly<K> r(f.dim());
    for (const auto& [e, v] : f.coeffs()) {
        typename MultiPoly<K>::Expo ne = e;
        for (long long j = off; j < f.dim(); ++j) ne[j] -= s0[j];
        r.add_term(ne, v / c0);
    }
    return r;
}

template <class K>
struct LineReduction {
    std::vector<long long> direction;  // primitive, over multiplicative coords
    Poly<K> g;                         // f = g(z), z = monomial with exponent direction
};

// If the support lies on one line through the origin in the multiplicative
// exponent lattice, rewrite f as a one-variable polynomial g(z).
template <class K>
std::optional<LineReduction<K>> lattice_line_reduce(const Torus<K>& t, const MultiPoly<K>& f_in) {
    MultiPoly<K> f = unit_normalize(t, f_in);
    if (f.is_zero() || f.is_constant()) throw MathError("lattice reduction of a unit");
    long long off = t.mult_offset();
    if (t.has_additive && f.uses_coord(0)) return std::nullopt;
    long long md = (long long)t.params.size();
    std::vector<long long> v;
    for (const auto& [e, c] : f.coeffs()) {
        bool zero = true;
        for (long long j = 0; j < md; ++j)
            if (e[off + j] != 0) zero = false;
        if (zero) continue;
        v.assign(e.begin() + off, e.end());
        break;
    }
    Int g0 = 0;
    for (long long x : v) g0 = gcd(g0, Int(static_cast<long>(x)));
    for (long long& x : v) x /= g0.get_si();
    // Unit normalization makes every support vector a nonnegative multiple
    // of the lex-least nonzero one, so the direction points lex-forward.
    Poly<K> g;
    for (const auto& [e, c] : f.coeffs()) {
        long long k = 0;
        bool found = false;
        for (long long j = 0; j < md && !found; ++j)
            if (v[j] != 0) {
                if (e[off + j] % v[j] != 0) return std::nullopt;
                k = e[off + j] / v[j];
                found = true;
            }
        for (long long j = 0; j < md; ++j)
            if (e[off + j] != k * v[j]) return std::nullopt;
        if (k < 0) return std::nullopt;
        g.set_coeff(k, c);
    }
    return LineReduction<K>{v, g};
}

template <class K>
K line_ratio(const Torus<K>& t, const std::vector<long long>& direction) {
    K rho(1);
    for (size_t j = 0; j < t.params.size(); ++j)
        if (direction[j] != 0) rho = rho * field_pow(t.params[j], direction[j]);
    return rho;
}

}  // namespace gwb
