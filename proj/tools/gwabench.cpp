#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwb/serde.hpp"

namespace {

using namespace gwb;

constexpr int kOk = 0, kFail = 1, kUsage = 2;

long long env_default_window() {
    if (const char* e = std::getenv("GWA_WINDOW_DEFAULT")) {
        char* end = nullptr;
        long long v = std::strtoll(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultWindow;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", json{{"path", path}});
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON", json{{"path", path}, {"what", e.what()}});
    }
    return j;
}

void emit(const json& out, const std::string& out_path) {
    std::string s = out.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write file", json{{"path", out_path}});
    f << s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Shared state, filled by CLI11 option parsing.
struct Args {
    std::string spec_file, f_expr, ring = "A", p_str, params_str, out, checks, s_str, g_str;
    std::string h_expr = "u";
    long long window = 0;  // 0 = unset
    long long dim = 1;
    long long count = 100, span = 8;
    long long seed = 0;
    bool seed_set = false;
    bool skip_orbit_validation = false;
};

json ring_flags_to_descriptor(const Args& a) {
    json r{{"kind", a.ring}, {"dim", a.dim}};
    if (!a.p_str.empty()) r["p"] = a.p_str;
    if (!a.params_str.empty()) {
        json params = json::array();
        for (const auto& s : split_list(a.params_str)) params.push_back(s);
        r["params"] = params;
        if (a.dim == 1) r["dim"] = (long long)params.size() + (a.ring == "A" ? 1 : 0);
    }
    return r;
}

// Accept a bare spec object, a {"spec":...} build report, or a
// {"specs":[...]} scenario; always yields ring descriptor + spec objects.
struct SpecFile {
    json ring;
    std::vector<json> specs;
    long long window = 0;
};

SpecFile load_spec_file(const std::string& path) {
    json j = read_json_file(path);
    if (!j.is_object()) throw ParseError("spec file must hold a JSON object");
    SpecFile out;
    if (!j.contains("ring")) throw ParseError("spec file needs a ring descriptor");
    out.ring = j.at("ring");
    if (j.contains("spec"))
        out.specs.push_back(j.at("spec"));
    else if (j.contains("specs"))
        for (const auto& s : j.at("specs")) out.specs.push_back(s);
    else
        out.specs.push_back(j);
    if (j.contains("window") && j.at("window").is_number()) out.window = j.at("window").get<long long>();
    if (out.specs.empty()) throw ParseError("spec file holds no specs");
    return out;
}

template <class F>
auto with_line(const RingVariant& rv, F&& f) {
    if (std::holds_alternative<SigmaLine<Rat>>(rv)) return f(std::get<SigmaLine<Rat>>(rv));
    if (std::holds_alternative<SigmaLine<RatFunc>>(rv)) return f(std::get<SigmaLine<RatFunc>>(rv));
    throw ParseError("this subcommand needs a one-dimensional ring");
}

int run_build(const Args& a) {
    if (a.spec_file.empty() == a.f_expr.empty())
        throw ParseError("pass exactly one of --spec or --f");
    json ring_json;
    std::vector<json> spec_jsons;
    long long W = a.window;
    if (!a.spec_file.empty()) {
        SpecFile sf = load_spec_file(a.spec_file);
        ring_json = sf.ring;
        spec_jsons = sf.specs;
        if (W == 0) W = sf.window;
        if (spec_jsons.size() != 1)
            throw ParseError("build expects a single spec", json{{"got", spec_jsons.size()}});
    } else {
        ring_json = ring_flags_to_descriptor(a);
    }
    if (W == 0) W = env_default_window();
    RingVariant rv = load_ring(ring_json);
    return with_line(rv, [&](const auto& line) {
        using K = decltype(line.p);
        GradedRingSpec<K> spec = [&] {
            if (!a.f_expr.empty()) {
                Poly<K> f = to_poly<K>(parse_expression(a.f_expr));
                GwaEmbedding<K> emb =
                    gwa_embed(line, f, kDefaultSymbolicWindow, !a.skip_orbit_validation);
                if (emb.specs.size() != 1)
                    throw MathError("defining element spans several orbits; build them separately",
                                    json{{"orbits", emb.specs.size()}});
                return emb.specs.front();
            }
            return load_spec(line, spec_jsons.front(), kDefaultSymbolicWindow,
                             !a.skip_orbit_validation);
        }();
        json out{{"version", 1},
                 {"ring", ring_to_json(line)},
                 {"spec", spec_to_json(spec)},
                 {"window", W},
                 {"pieces", pieces_to_json(piece_table(spec, W))}};
        emit(out, a.out);
        return kOk;
    });
}

template <class K>
std::vector<Report> run_checks(const GradedRingSpec<K>& s, const std::vector<std::string>& names,
                               long long W) {
    std::vector<Report> out;
    for (const auto& name : names) {
        if (name == "closure")
            out.push_back(check_closure(s, W));
        else if (name == "stable-range")
            out.push_back(check_stable_range(s, std::min<long long>(W, 6)));
        else if (name == "comaximality")
            out.push_back(check_comaximality(s, s.N, s.N + W));
        else if (name == "generation")
            out.push_back(check_generation(s, W));
        else if (name == "simplicity")
            out.push_back(check_simplicity_criterion(s, s.N, W));
        else if (name == "quasi-fg") {
            long long r = std::max<long long>(2 * s.N - 1, 1);
            out.push_back(check_quasi_fg(s, r, std::max<long long>(W, r + 2)));
        } else if (name == "trichotomy")
            out.push_back(check_trichotomy(support_cycle_sequence(s, std::min<long long>(W, 10)), s.G));
        else if (name == "psi")
            out.push_back(check_psi_duality(s, std::min<long long>(W, 10)));
        else
            throw ParseError("unknown check", json{{"check", name}});
    }
    return out;
}

int run_verify(const Args& a) {
    if (a.spec_file.empty()) throw ParseError("verify needs --spec");
    SpecFile sf = load_spec_file(a.spec_file);
    long long W = a.window ? a.window : (sf.window ? sf.window : env_default_window());
    std::vector<std::string> names =
        a.checks.empty() ? std::vector<std::string>{"closure", "stable-range", "comaximality",
                                                    "generation", "simplicity", "quasi-fg",
                                                    "trichotomy", "psi"}
                         : split_list(a.checks);
    RingVariant rv = load_ring(sf.ring);
    return with_line(rv, [&](const auto& line) {
        using K = decltype(line.p);
        bool all_ok = true;
        json results = json::array();
        for (const auto& sj : sf.specs) {
            GradedRingSpec<K> spec =
                load_spec(line, sj, kDefaultSymbolicWindow, !a.skip_orbit_validation);
            json reports = json::array();
            for (const Report& r : run_checks(spec, names, W)) {
                reports.push_back(r.to_json());
                all_ok = all_ok && r.ok();
            }
            results.push_back(json{{"spec", spec_to_json(spec)}, {"window", W},
                                   {"reports", reports}});
        }
        json out{{"version", 1},
                 {"ring", ring_to_json(line)},
                 {"results", results},
                 {"verdict", all_ok ? "PASS" : "FAIL"}};
        emit(out, a.out);
        return all_ok ? kOk : kFail;
    });
}

int run_lonely(const Args& a) {
    if (a.f_expr.empty()) throw ParseError("lonely needs --f");
    long long W = a.window ? a.window : kDefaultSymbolicWindow;
    RingVariant rv = load_ring(ring_flags_to_descriptor(a));
    auto finish = [&](const json& ring_json, const std::string& f_str, const LonelyVerdict& v) {
        json out = verdict_to_json(v);
        out["version"] = 1;
        out["ring"] = ring_json;
        out["f"] = f_str;
        emit(out, a.out);
        return v.lonely ? kOk : kFail;
    };
    return std::visit(
        [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            if constexpr (std::is_same_v<R, SigmaLine<Rat>> || std::is_same_v<R, SigmaLine<RatFunc>>) {
                using K = decltype(ring.p);
                Poly<K> f = to_poly<K>(parse_expression(a.f_expr));
                LonelyVerdict v = lonely_on_line(ring, f, W);
                return finish(ring_to_json(ring), poly_str(canonical_gen(ring, f)), v);
            } else {
                using K = typename std::decay_t<decltype(ring.params)>::value_type;
                MultiPoly<K> f = to_multipoly<K>(parse_expression(a.f_expr), ring);
                LonelyVerdict v = is_lonely(ring, f, W);
                return finish(ring_to_json(ring), multi_str(ring, f), v);
            }
        },
        rv);
}

int run_morita(const Args& a) {
    long long W = a.window ? a.window : 8;
    std::set<long long> S;
    for (const auto& tok : split_list(a.s_str)) {
        try {
            S.insert(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError("profile entries must be integers", json{{"got", tok}});
        }
    }
    RingVariant rv = load_ring(ring_flags_to_descriptor(a));
    return with_line(rv, [&](const auto& line) {
        using K = decltype(line.p);
        Poly<K> h = canonical_gen(line, to_poly<K>(parse_expression(a.h_expr)));
        if (h.is_constant()) throw MathError("h must be nonconstant");
        Poly<K> q = poly_divexact(h, poly_gcd(h, h.derivative())).monic();
        GradedRingSpec<K> spec = make_spec(line, q, cycle_from_S(S), h, Poly<K>(k_int<K>(1)));
        Report r = check_morita(spec, W);
        json out{{"version", 1},
                 {"ring", ring_to_json(line)},
                 {"spec", spec_to_json(spec)},
                 {"window", W},
                 {"report", r.to_json()},
                 {"verdict", verdict_name(r.verdict)}};
        emit(out, a.out);
        return r.ok() ? kOk : kFail;
    });
}

int run_gwa(const Args& a) {
    if (a.f_expr.empty()) throw ParseError("gwa needs --f");
    RingVariant rv = load_ring(ring_flags_to_descriptor(a));
    return with_line(rv, [&](const auto& line) {
        using K = decltype(line.p);
        Poly<K> f = to_poly<K>(parse_expression(a.f_expr));
        GwaEmbedding<K> emb = gwa_embed(line, f);
        json specs = json::array();
        for (const auto& s : emb.specs) specs.push_back(spec_to_json(s));
        Poly<K> fc = canonical_gen(line, f);
        json out{{"version", 1},
                 {"ring", ring_to_json(line)},
                 {"x", "t"},
                 {"y", "(" + poly_str(fc) + ")*t^-1"},
                 {"yx", poly_str(fc)},
                 {"xy", poly_str(canonical_gen(line, apply_sigma(line, fc, 1)))},
                 {"specs", specs}};
        emit(out, a.out);
        return kOk;
    });
}

json cycle_suite(const Cycle& G, long long window, bool& ok) {
    json reports = json::array();
    for (const Report& r : {check_cocycle(G, window), check_coefficient_bounds(G, window),
                            check_min_zero(G, window)}) {
        reports.push_back(r.to_json());
        ok = ok && r.ok();
    }
    return reports;
}

int run_cycles(const Args& a) {
    long long W = a.window ? a.window : 20;
    bool ok = true;
    json out{{"version", 1}, {"window", W}};
    if (!a.g_str.empty()) {
        json gj;
        try {
            gj = json::parse(a.g_str);
        } catch (const json::exception& e) {
            throw ParseError("invalid cycle JSON", json{{"what", e.what()}});
        }
        Cycle G = cycle_from_json(gj);
        out["G"] = cycle_to_json(G);
        out["reports"] = cycle_suite(G, W, ok);
    } else {
        std::mt19937_64 rng(static_cast<unsigned long long>(a.seed));
        out["seed"] = a.seed;
        out["count"] = a.count;
        out["span"] = a.span;
        json failures = json::array();
        for (long long i = 0; i < a.count && ok; ++i) {
            Cycle G = random_pleasant_cycle(rng, a.span);
            bool this_ok = true;
            json reports = cycle_suite(G, W, this_ok);
            if (!this_ok) {
                failures.push_back(json{{"G", cycle_to_json(G)}, {"reports", reports}});
                ok = false;
            }
        }
        out["failures"] = failures;
        out["verdict"] = ok ? "PASS" : "FAIL";
    }
    emit(out, a.out);
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Z-graded rings along a sigma-orbit"};
    app.require_subcommand(1);
    Args a;

    auto add_ring_flags = [&](CLI::App* c) {
        c->add_option("--ring", a.ring, "ring kind: A (additive) or B (multiplicative)");
        c->add_option("--p", a.p_str, "multiplicative parameter, a rational or 'symbolic'");
        c->add_option("--dim", a.dim, "coordinate count (>= 2 selects a torus)");
        c->add_option("--params", a.params_str, "comma-separated multiplicative parameters");
    };
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", a.out, "write the JSON report here instead of stdout");
        c->add_option("--window", a.window, "degree window for tables and checks");
    };

    CLI::App* build = app.add_subcommand("build", "construct piece generators for a spec");
    build->add_option("--spec", a.spec_file, "spec JSON file");
    build->add_option("--f", a.f_expr, "shortcut: defining element of a generalized Weyl algebra");
    build->add_flag("--skip-orbit-validation", a.skip_orbit_validation,
                    "accept orbit data without the loneliness check");
    add_ring_flags(build);
    add_out(build);

    CLI::App* verify = app.add_subcommand("verify", "run ring-identity checks on a spec");
    verify->add_option("--spec", a.spec_file, "spec JSON file")->required();
    verify->add_option("--checks", a.checks, "comma-separated check names");
    verify->add_flag("--skip-orbit-validation", a.skip_orbit_validation,
                     "accept orbit data without the loneliness check");
    add_out(verify);

    CLI::App* lonely = app.add_subcommand("lonely", "decide sigma-loneliness of a divisor");
    lonely->add_option("--f", a.f_expr, "defining polynomial")->required();
    add_ring_flags(lonely);
    add_out(lonely);

    CLI::App* morita = app.add_subcommand("morita", "endomorphism ring of a profile progenerator");
    morita->set_help_flag("--help", "print help");
    morita->add_option("--S", a.s_str, "comma-separated profile offsets (empty = regular module)");
    morita->add_option("--h", a.h_expr, "translate family generator");
    add_ring_flags(morita);
    add_out(morita);

    CLI::App* gwa = app.add_subcommand("gwa", "embed a generalized Weyl algebra");
    gwa->add_option("--f", a.f_expr, "defining element")->required();
    add_ring_flags(gwa);
    add_out(gwa);

    CLI::App* cycles = app.add_subcommand("cycles", "cycle lemma suite on given or random cycles");
    cycles->add_option("--G", a.g_str, "cycle as JSON index/coefficient pairs");
    cycles->add_option("--count", a.count, "number of random cycles");
    cycles->add_option("--span", a.span, "max span of random cycles");
    cycles->add_option("--seed", a.seed, "random seed (recorded in the report)")
        ->each([&](const std::string&) { a.seed_set = true; });
    add_out(cycles);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (build->parsed()) return run_build(a);
        if (verify->parsed()) return run_verify(a);
        if (lonely->parsed()) return run_lonely(a);
        if (morita->parsed()) return run_morita(a);
        if (gwa->parsed()) return run_gwa(a);
        if (cycles->parsed()) return run_cycles(a);
    } catch (const ParseError& e) {
        json err{{"version", 1}, {"error", e.what()}, {"detail", e.detail()}};
        std::cerr << err.dump(2) << "\n";
        return kUsage;
    } catch (const MathError& e) {
        json err{{"version", 1}, {"error", e.what()}, {"detail", e.detail()}};
        std::cout << err.dump(2) << "\n";
        return kFail;
    }
    return kUsage;
}
