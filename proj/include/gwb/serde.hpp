#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gwb/lonely.hpp"
#include "gwb/morita.hpp"
#include "gwb/parse.hpp"
#include "gwb/print.hpp"

namespace gwb {

// One of the four coefficient configurations behind a ring descriptor
// {"kind":"A"|"B", "p":"2"|"symbolic", "dim":d, "params":[...]}.
using RingVariant = std::variant<SigmaLine<Rat>, SigmaLine<RatFunc>, Torus<Rat>, Torus<RatFunc>>;

inline RatFunc ratfunc_var() {
    Poly<Rat> v;
    v.set_coeff(1, Rat(1));
    return RatFunc(v);
}

namespace serde_detail {

inline bool descriptor_symbolic(const json& j) {
    if (j.contains("p") && j.at("p").is_string() && j.at("p").get<std::string>() == "symbolic")
        return true;
    if (j.contains("params"))
        for (const auto& e : j.at("params"))
            if (e.is_string() && e.get<std::string>().find('p') != std::string::npos) return true;
    return false;
}

template <class K>
std::vector<K> parse_params(const json& j, size_t want) {
    std::vector<K> out;
    if (!j.contains("params") || !j.at("params").is_array())
        throw ParseError("ring descriptor needs a params array", json{{"expected", want}});
    for (const auto& e : j.at("params")) {
        if (!e.is_string()) throw ParseError("params entries must be strings");
        if constexpr (std::is_same_v<K, Rat>)
            out.push_back(to_rat(parse_expression(e.get<std::string>())));
        else
            out.push_back(to_ratfunc(parse_expression(e.get<std::string>())));
    }
    if (out.size() != want)
        throw ParseError("wrong number of params",
                         json{{"expected", want}, {"got", out.size()}});
    return out;
}

}  // namespace serde_detail

inline RingVariant load_ring(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("ring descriptor needs a kind", json{{"got", j}});
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "A" && kind != "B")
        throw ParseError("ring kind must be A or B", json{{"got", kind}});
    long long dim = j.value("dim", 1LL);
    if (dim < 1) throw ParseError("ring dimension must be positive", json{{"got", dim}});
    bool symbolic = serde_detail::descriptor_symbolic(j);
    if (dim == 1) {
        if (kind == "A") return additive_line();
        if (!j.contains("p")) throw ParseError("multiplicative ring needs p");
        if (symbolic) return multiplicative_line(ratfunc_var());
        return multiplicative_line(to_rat(parse_expression(j.at("p").get<std::string>())));
    }
    bool additive = kind == "A";
    size_t want = additive ? dim - 1 : dim;
    if (symbolic)
        return make_torus(additive, serde_detail::parse_params<RatFunc>(j, want));
    return make_torus(additive, serde_detail::parse_params<Rat>(j, want));
}

inline json ring_to_json(const SigmaLine<Rat>& r) {
    if (!r.multiplicative) return json{{"kind", "A"}, {"dim", 1}};
    return json{{"kind", "B"}, {"p", rat_str(r.p)}, {"dim", 1}};
}

inline json ring_to_json(const SigmaLine<RatFunc>& r) {
    if (!r.multiplicative) return json{{"kind", "A"}, {"dim", 1}};
    return json{{"kind", "B"}, {"p", "symbolic"}, {"dim", 1}};
}

template <class K>
json ring_to_json(const Torus<K>& t) {
    json params = json::array();
    for (const auto& p : t.params) {
        if constexpr (std::is_same_v<K, Rat>)
            params.push_back(rat_str(p));
        else
            params.push_back(frac_str(p, "p"));
    }
    json out{{"kind", t.has_additive ? "A" : "B"}, {"dim", t.dim()}, {"params", params}};
    if constexpr (!std::is_same_v<K, Rat>) out["p"] = "symbolic";
    return out;
}

inline json ring_to_json(const RingVariant& r) {
    return std::visit([](const auto& x) { return ring_to_json(x); }, r);
}

template <class K>
GradedRingSpec<K> load_spec(const SigmaLine<K>& line, const json& j, long long lonely_window,
                            bool validate_lonely) {
    for (const char* key : {"orbit", "G", "h", "j"})
        if (!j.contains(key)) throw ParseError("spec needs a field", json{{"field", key}});
    Poly<K> q = to_poly<K>(parse_expression(j.at("orbit").get<std::string>()));
    Cycle G = cycle_from_json(j.at("G"));
    Poly<K> h = to_poly<K>(parse_expression(j.at("h").get<std::string>()));
    Poly<K> jj = to_poly<K>(parse_expression(j.at("j").get<std::string>()));
    return make_spec(line, q, G, h, jj, lonely_window, validate_lonely);
}

template <class K>
json spec_to_json(const GradedRingSpec<K>& s) {
    return json{{"orbit", poly_str(s.q)},
                {"G", cycle_to_json(s.G)},
                {"h", poly_str(s.h)},
                {"j", poly_str(s.j)}};
}

inline json verdict_to_json(const LonelyVerdict& v) {
    json w = json::object();
    if (v.witness_point) {
        json pt = json::array();
        for (const auto& c : *v.witness_point) pt.push_back(rat_str(c));
        w["point"] = pt;
        if (v.witness_shift) w["shift"] = *v.witness_shift;
    } else if (v.witness_shift) {
        w["shift"] = *v.witness_shift;
    }
    return json{{"lonely", v.lonely},
                {"witness", w},
                {"certificate", cert_name(v.cert)},
                {"bound", v.bound}};
}

template <class K>
json pieces_to_json(const PieceTable<K>& t) {
    json out = json::object();
    for (const auto& [n, g] : t) out[std::to_string(n)] = poly_str(g);
    return out;
}

template <class K>
json pieces_to_json(const FracTable<K>& t) {
    json out = json::object();
    for (const auto& [n, g] : t) out[std::to_string(n)] = frac_str(g);
    return out;
}

}  // namespace gwb
