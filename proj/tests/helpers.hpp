#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "gwb/parse.hpp"

// String shorthands shared by the test files.
inline gwb::Poly<gwb::Rat> P(const std::string& s) {
    return gwb::to_poly<gwb::Rat>(gwb::parse_expression(s));
}

inline gwb::Poly<gwb::RatFunc> Pp(const std::string& s) {
    return gwb::to_poly<gwb::RatFunc>(gwb::parse_expression(s));
}

inline gwb::LaurentPoly<gwb::Rat> L(const std::string& s) {
    return gwb::to_laurent<gwb::Rat>(gwb::parse_expression(s));
}

inline gwb::Cycle C(std::initializer_list<std::pair<long long, long long>> t) {
    gwb::Cycle c;
    for (const auto& [i, v] : t) c.set_coeff(i, v);
    return c;
}
