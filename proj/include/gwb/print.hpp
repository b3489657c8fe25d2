#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwb/cycle.hpp"
#include "gwb/fraction.hpp"
#include "gwb/laurent.hpp"
#include "gwb/multipoly.hpp"

namespace gwb {

namespace detail {

// Sign-split coefficient rendering: (negative?, absolute factor text).
// An empty factor means a bare power of the variable.
inline std::pair<bool, std::string> coeff_repr(const Rat& c, bool unit_blank) {
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (unit_blank && a == 1) return {neg, ""};
    return {neg, rat_str(a)};
}

template <class K>
std::string poly_str(const Poly<K>& f, const std::string& var);

inline std::pair<bool, std::string> coeff_repr(const RatFunc& c, bool unit_blank) {
    if (c.is_constant()) return coeff_repr(c.constant_value(), unit_blank);
    bool neg = c.num().lc() < 0;
    Poly<Rat> n = neg ? -c.num() : c.num();
    std::string s = "(" + poly_str(n, "p") + ")";
    if (!(c.den() == Poly<Rat>(1))) s += "/(" + poly_str(c.den(), "p") + ")";
    return {neg, s};
}

inline std::string power_str(const std::string& var, long long e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

template <class K>
std::string terms_str(const std::vector<std::pair<long long, K>>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        auto [neg, cs] = coeff_repr(c, e != 0);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (e == 0)
            out += cs.empty() ? "1" : cs;
        else if (cs.empty())
            out += power_str(var, e);
        else
            out += cs + "*" + power_str(var, e);
    }
    return out;
}

template <class K>
std::string poly_str(const Poly<K>& f, const std::string& var) {
    std::vector<std::pair<long long, K>> terms(f.coeffs().rbegin(), f.coeffs().rend());
    return terms_str(terms, var);
}

}  // namespace detail

// Canonical text form: descending exponents, explicit signs, '*' between a
// nontrivial coefficient and the variable power.
template <class K>
std::string poly_str(const Poly<K>& f, const std::string& var = "u") {
    return detail::poly_str(f, var);
}

template <class K>
std::string laurent_str(const LaurentPoly<K>& f, const std::string& var = "u") {
    std::vector<std::pair<long long, K>> terms(f.coeffs().rbegin(), f.coeffs().rend());
    return detail::terms_str(terms, var);
}

template <class K>
std::string frac_str(const PolyFraction<K>& x, const std::string& var = "u") {
    if (x.den() == Poly<K>(1)) return poly_str(x.num(), var);
    return "(" + poly_str(x.num(), var) + ")/(" + poly_str(x.den(), var) + ")";
}

inline std::string cycle_str(const Cycle& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, v] : c.coeffs()) {
        bool neg = v < 0;
        long long a = neg ? -v : v;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (a != 1) out += std::to_string(a) + "*";
        out += "Z" + std::to_string(i);
    }
    return out;
}

inline json cycle_to_json(const Cycle& c) {
    json a = json::array();
    for (const auto& [i, v] : c.coeffs()) a.push_back(json::array({i, v}));
    return a;
}

inline Cycle cycle_from_json(const json& a) {
    if (!a.is_array()) throw ParseError("cycle must be an array of [index, coefficient] pairs");
    Cycle c;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("cycle entry must be an integer pair");
        long long i = e[0].get<long long>();
        c.set_coeff(i, c.coeff(i) + e[1].get<long long>());
    }
    return c;
}

// Coordinate display name: the additive coordinate is x1; multiplicative
// coordinates are x2, x3, ... regardless of torus kind.
template <class K>
std::string coord_name(const Torus<K>& t, long long i) {
    if (t.has_additive && i == 0) return "x1";
    return "x" + std::to_string(i - t.mult_offset() + 2);
}

template <class K>
std::string multi_str(const Torus<K>& t, const MultiPoly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.coeffs()) {
        auto [neg, cs] = detail::coeff_repr(c, true);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (long long i = 0; i < f.dim(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::power_str(coord_name(t, i), e[i]);
        }
        if (mono.empty())
            out += cs.empty() ? "1" : cs;
        else if (cs.empty())
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

}  // namespace gwb
