#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "gwb/error.hpp"

namespace gwb {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) through arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

// Lift a machine integer into a scalar field. mpq_class has no long long
// constructor (overload ambiguity), so the Rat case narrows through long.
template <class K>
struct KTraits {
    static K of_int(long long v) { return K(v); }
};
template <>
struct KTraits<Rat> {
    static Rat of_int(long long v) { return Rat(static_cast<long>(v)); }
};
template <class K>
K k_int(long long v) {
    return KTraits<K>::of_int(v);
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline bool rat_is_int(const Rat& x) { return x.get_den() == 1; }

// x^e for integer e; e < 0 requires x != 0.
inline Rat rat_pow(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw MathError("zero raised to a negative power");
        return Rat(0);
    }
    Rat base = x;
    unsigned long long n;
    if (e < 0) {
        base = Rat(x.get_den(), x.get_num());
        base.canonicalize();
        n = static_cast<unsigned long long>(-(e + 1)) + 1;
    } else {
        n = static_cast<unsigned long long>(e);
    }
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Smallest integer >= x.
inline Int rat_ceil(const Rat& x) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (r != 0) q += 1;
    return q;
}

// Discrete log over Q: smallest n (any sign, n != 0 allowed results include 0)
// with base^n == x, searching |n| <= cap. base must have |base| != 1, base != 0.
inline std::optional<long long> rat_dlog(const Rat& base, const Rat& x, long long cap = 4096) {
    if (base == 0 || rat_abs(base) == 1) throw MathError("discrete log base must have absolute value != 0, 1");
    if (x == 0) return std::nullopt;
    Rat up(1), down(1);
    for (long long n = 0; n <= cap; ++n) {
        if (up == x) return n;
        if (n > 0 && down == x) return -n;
        up *= base;
        down /= base;
    }
    return std::nullopt;
}

}  // namespace gwb
