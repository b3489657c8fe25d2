#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "gwb/laurent.hpp"
#include "gwb/multipoly.hpp"

namespace gwb {
namespace parse_detail {

// Monomial over named variables, exponents possibly negative.
using Mono = std::map<std::string, long long>;
// Sum of monomials with rational coefficients.
using Expr = std::map<Mono, Rat>;

inline void expr_add(Expr& a, const Mono& m, const Rat& c) {
    auto it = a.find(m);
    if (it == a.end()) {
        if (c != 0) a.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) a.erase(it);
}

inline Expr expr_sum(const Expr& a, const Expr& b, int sign) {
    Expr r = a;
    for (const auto& [m, c] : b) expr_add(r, m, sign > 0 ? c : Rat(-c));
    return r;
}

inline Expr expr_mul(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m = ma;
            for (const auto& [v, e] : mb) {
                m[v] += e;
                if (m[v] == 0) m.erase(v);
            }
            expr_add(r, m, ca * cb);
        }
    return r;
}

inline Expr expr_one() { return Expr{{Mono{}, Rat(1)}}; }

// Fraction of two expressions; denominator never the zero expression.
struct Value {
    Expr num;
    Expr den = expr_one();
};

inline Value val_sum(const Value& a, const Value& b, int sign) {
    Value r;
    r.num = expr_sum(expr_mul(a.num, b.den), expr_mul(b.num, a.den), sign);
    r.den = expr_mul(a.den, b.den);
    return r;
}

inline Value val_mul(const Value& a, const Value& b) {
    return Value{expr_mul(a.num, b.num), expr_mul(a.den, b.den)};
}

inline Value val_div(const Value& a, const Value& b, size_t pos) {
    if (b.num.empty()) throw ParseError("division by zero", json{{"position", pos}});
    return Value{expr_mul(a.num, b.den), expr_mul(a.den, b.num)};
}

inline Value val_pow(Value a, long long k, size_t pos) {
    if (k < 0) {
        if (a.num.empty()) throw ParseError("division by zero", json{{"position", pos}});
        std::swap(a.num, a.den);
        k = -k;
    }
    Value r{expr_one(), expr_one()};
    for (; k > 0; --k) r = val_mul(r, a);
    return r;
}

struct Token {
    enum Kind { NUM, IDENT, OP, END } kind;
    std::string text;
    size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::NUM, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::IDENT, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::OP, std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError("unexpected character", json{{"position", i}, {"character", std::string(1, c)}});
    }
    out.push_back({Token::END, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    Value run() {
        Value v = expr();
        expect_end();
        return v;
    }

private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    bool is_op(const char* t) const { return peek().kind == Token::OP && peek().text == t; }

    void expect_end() {
        if (peek().kind != Token::END)
            throw ParseError("unexpected trailing input",
                             json{{"position", peek().pos}, {"token", peek().text}});
    }

    Value expr() {
        Value v = is_op("-") || is_op("+") ? Value{Expr{}, expr_one()} : term();
        while (is_op("+") || is_op("-")) {
            int sign = next().text == "+" ? 1 : -1;
            v = val_sum(v, term(), sign);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (is_op("*") || is_op("/")) {
            Token op = next();
            Value rhs = factor();
            v = op.text == "*" ? val_mul(v, rhs) : val_div(v, rhs, op.pos);
        }
        return v;
    }

    Value factor() {
        if (is_op("-")) {
            next();
            Value v = factor();
            v.num = expr_sum(Expr{}, v.num, -1);
            return v;
        }
        if (is_op("+")) {
            next();
            return factor();
        }
        Value v = atom();
        if (is_op("^")) {
            size_t pos = next().pos;
            v = val_pow(v, exponent(), pos);
        }
        return v;
    }

    long long exponent() {
        bool par = false, neg = false;
        if (is_op("(")) {
            par = true;
            next();
        }
        if (is_op("-")) {
            neg = true;
            next();
        }
        if (peek().kind != Token::NUM)
            throw ParseError("expected an integer exponent", json{{"position", peek().pos}});
        Token t = next();
        long long e = 0;
        for (char c : t.text) {
            e = e * 10 + (c - '0');
            if (e > 1000000)
                throw ParseError("exponent too large", json{{"position", t.pos}});
        }
        if (par) {
            if (!is_op(")"))
                throw ParseError("expected ')'", json{{"position", peek().pos}});
            next();
        }
        return neg ? -e : e;
    }

    Value atom() {
        const Token& t = peek();
        if (t.kind == Token::NUM) {
            next();
            Rat c(t.text);
            c.canonicalize();
            Value v;
            expr_add(v.num, Mono{}, c);
            return v;
        }
        if (t.kind == Token::IDENT) {
            next();
            Value v;
            expr_add(v.num, Mono{{t.text, 1}}, Rat(1));
            return v;
        }
        if (t.kind == Token::OP && t.text == "(") {
            next();
            Value v = expr();
            if (!is_op(")"))
                throw ParseError("expected ')'", json{{"position", peek().pos}});
            next();
            return v;
        }
        throw ParseError("expected a number, variable or '('",
                         json{{"position", t.pos}, {"token", t.text}});
    }
};

}  // namespace parse_detail

template <class K>
K k_p_monomial(const Rat& c, long long p_exp) {
    if constexpr (std::is_same_v<K, Rat>) {
        if (p_exp != 0) throw ParseError("variable not allowed here", json{{"variable", "p"}});
        return c;
    } else {
        Poly<Rat> n, d;
        n.set_coeff(std::max<long long>(p_exp, 0), c);
        d.set_coeff(std::max<long long>(-p_exp, 0), Rat(1));
        return K(n, d);
    }
}

namespace parse_detail {

// Read an Expr as a Laurent series in a single main variable (u or z, not
// both), with an optional symbolic-p part folded into the coefficients.
template <class K>
LaurentPoly<K> expr_to_laurent(const Expr& e) {
    bool seen_u = false, seen_z = false;
    for (const auto& [m, c] : e)
        for (const auto& [v, ex] : m) {
            seen_u = seen_u || v == "u";
            seen_z = seen_z || v == "z";
        }
    if (seen_u && seen_z) throw ParseError("use a single series variable, u or z");
    const char* main = seen_z ? "z" : "u";
    LaurentPoly<K> out;
    for (const auto& [m, c] : e) {
        long long ue = 0, pe = 0;
        for (const auto& [v, ex] : m) {
            if (v == main)
                ue = ex;
            else if (v == "p")
                pe = ex;
            else
                throw ParseError("variable not allowed here", json{{"variable", v}});
        }
        out.set_coeff(ue, out.coeff(ue) + k_p_monomial<K>(c, pe));
    }
    return out;
}

}  // namespace parse_detail

inline parse_detail::Value parse_expression(const std::string& s) {
    return parse_detail::Parser(s).run();
}

template <class K>
LaurentPoly<K> to_laurent(const parse_detail::Value& v) {
    LaurentPoly<K> n = parse_detail::expr_to_laurent<K>(v.num);
    LaurentPoly<K> d = parse_detail::expr_to_laurent<K>(v.den);
    if (d.is_zero()) throw ParseError("division by zero");
    if (n.is_zero()) return n;
    auto nn = laurent_normalize(n);
    auto dd = laurent_normalize(d);
    auto [q, r] = poly_divmod(nn.core, dd.core);
    if (!r.is_zero()) throw ParseError("denominator does not divide the numerator");
    LaurentPoly<K> out;
    for (const auto& [i, c] : q.coeffs()) out.set_coeff(i + nn.unit_exp - dd.unit_exp, c);
    return out;
}

template <class K>
Poly<K> to_poly(const parse_detail::Value& v) {
    LaurentPoly<K> l = to_laurent<K>(v);
    if (l.has_negative_exp())
        throw ParseError("negative exponents are not allowed here");
    return l.as_poly();
}

inline Rat to_rat(const parse_detail::Value& v) {
    Poly<Rat> f = to_poly<Rat>(v);
    if (!f.is_constant()) throw ParseError("expected a constant");
    return f.constant_term();
}

inline RatFunc to_ratfunc(const parse_detail::Value& v) {
    auto conv = [](const parse_detail::Expr& e) -> LaurentPoly<Rat> {
        LaurentPoly<Rat> out;
        for (const auto& [m, c] : e) {
            long long pe = 0;
            for (const auto& [var, ex] : m) {
                if (var != "p") throw ParseError("variable not allowed here", json{{"variable", var}});
                pe = ex;
            }
            out.set_coeff(pe, out.coeff(pe) + c);
        }
        return out;
    };
    LaurentPoly<Rat> n = conv(v.num), d = conv(v.den);
    if (d.is_zero()) throw ParseError("division by zero");
    if (n.is_zero()) return RatFunc();
    auto nn = laurent_normalize(n);
    auto dd = laurent_normalize(d);
    long long sh = nn.unit_exp - dd.unit_exp;
    Poly<Rat> num = nn.core, den = dd.core, mono;
    mono.set_coeff(sh >= 0 ? sh : -sh, Rat(1));
    (sh >= 0 ? num : den) = (sh >= 0 ? num : den) * mono;
    return RatFunc(num, den);
}

// Multivariate input over a torus: variables named per coord_name (x1
// additive when present, x2.. multiplicative); the denominator must be a
// single monomial, and the additive coordinate must not end up inverted.
template <class K>
MultiPoly<K> to_multipoly(const parse_detail::Value& v, const Torus<K>& t) {
    if (v.den.size() != 1) throw ParseError("denominator must be a single monomial");
    auto coord_of = [&](const std::string& var) -> long long {
        if (var.size() >= 2 && var.size() <= 8 && var[0] == 'x' && var[1] != '0') {
            long long k = 0;
            for (size_t i = 1; i < var.size(); ++i) k = k * 10 + (var[i] - '0');
            if (k == 1 && t.has_additive) return 0;
            long long i = k - 2 + t.mult_offset();
            if (k >= 2 && i < t.dim()) return i;
        }
        throw ParseError("unknown variable for this ring", json{{"variable", var}});
    };
    const auto& [dm, dc] = *v.den.begin();
    std::vector<long long> de(t.dim(), 0);
    long long dpe = 0;
    for (const auto& [var, ex] : dm) {
        if (var == "p")
            dpe = ex;
        else
            de[coord_of(var)] = ex;
    }
    MultiPoly<K> out(t.dim());
    for (const auto& [m, c] : v.num) {
        std::vector<long long> e(t.dim(), 0);
        long long pe = 0;
        for (const auto& [var, ex] : m) {
            if (var == "p")
                pe = ex;
            else
                e[coord_of(var)] = ex;
        }
        for (long long i = 0; i < t.dim(); ++i) e[i] -= de[i];
        if (t.has_additive && e[0] < 0)
            throw ParseError("additive coordinate cannot be inverted");
        out.add_term(e, k_p_monomial<K>(c / dc, pe - dpe));
    }
    return out;
}

}  // namespace gwb
