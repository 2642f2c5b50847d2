#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "gitstab/json_io.hpp"
#include "gitstab/repro.hpp"

using namespace gitstab;

namespace {

struct CommonOpts {
    std::string problem_path;
    std::string curve;
    std::map<std::string, std::string> param_flags;
    std::string weights_csv;
    int m = 2;
    bool m_given = false;
    bool pretty = false;
    std::string config_path;
};

std::vector<long> parse_weights(const std::string& csv) {
    std::vector<long> w;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) w.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return w;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

GroebnerConfig limits_from_config(const CommonOpts& o) {
    if (o.config_path.empty()) return default_groebner_config();
    return repro::config_from_json(load_json(o.config_path)).limits;
}

std::map<std::string, Rational> assignment_from_flags(const CommonOpts& o) {
    std::map<std::string, Rational> a;
    for (const auto& [k, v] : o.param_flags)
        if (!v.empty()) a.emplace(k, Rational::from_string(v));
    return a;
}

catalog::Context<Rational> context_for(const CommonOpts& o) {
    return catalog::specialized_context(assignment_from_flags(o), limits_from_config(o));
}

/// Named catalog components for `profile`: <family>-<part>, e.g. i-star-H1.
Ideal<Rational> component_by_name(const catalog::Context<Rational>& ctx, const std::string& name) {
    auto pick = [&](const std::vector<Ideal<Rational>>& v, std::size_t i) {
        if (i >= v.size()) throw DomainError("no component " + name);
        return v[i];
    };
    if (name.rfind("i-star-", 0) == 0) {
        std::string part = name.substr(7);
        std::size_t idx = part == "H1" ? 0 : part == "B1" ? 1 : part == "H2" ? 2 : part == "B2" ? 3 : 4;
        return pick(catalog::i_star_primes(ctx), idx);
    }
    if (name.rfind("c-flat-", 0) == 0) {
        std::string part = name.substr(7);
        std::size_t idx = part == "C1" ? 0 : part == "C2" ? 1 : part == "E" ? 2 : 3;
        return pick(catalog::c_flat_primes(ctx), idx);
    }
    if (name.rfind("snowmen-P", 0) == 0)
        return pick(catalog::snowmen_primes(ctx), static_cast<std::size_t>(name.back() - '1'));
    throw DomainError("unknown component '" + name + "'");
}

void print_pretty(const Json& j, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                std::cout << pad << it.key() << ":\n";
                print_pretty(it.value(), indent + 2);
            } else {
                std::cout << pad << it.key() << ": " << (it.value().is_string()
                                                             ? it.value().get<std::string>()
                                                             : it.value().dump())
                          << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                print_pretty(v, indent + 2);
                std::cout << "\n";
            } else {
                std::cout << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        std::cout << pad << j.dump() << "\n";
    }
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        print_pretty(j);
    else
        std::cout << j.dump(2) << "\n";
}

/// Resolve the working ideal from --curve or --problem and run fn on it.
template <class Fn>
Json dispatch_ideal(const CommonOpts& o, Fn&& fn) {
    if (!o.curve.empty()) {
        auto ctx = context_for(o);
        Ideal<Rational> I = catalog::realize(o.curve, ctx);
        Problem p;
        p.ring = I.ring();
        p.m = o.m;
        if (!o.weights_csv.empty()) p.weights = parse_weights(o.weights_csv);
        return fn(I, p);
    }
    if (o.problem_path.empty()) throw DomainError("need --curve or --problem");
    Problem p = parse_problem(load_json(o.problem_path));
    if (!o.weights_csv.empty()) p.weights = parse_weights(o.weights_csv);
    if (o.m_given) p.m = o.m;
    return with_problem_ideals(p, [&](auto I, const Problem& pp) { return fn(I, pp); });
}

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_weights = false, bool wants_m = false) {
    cmd->add_option("--problem", o.problem_path, "JSON problem file");
    cmd->add_option("--curve", o.curve, "catalog curve name");
    for (const auto& name : catalog::parameter_names())
        cmd->add_option("--" + name, o.param_flags[name], "catalog parameter " + name);
    if (wants_weights) cmd->add_option("--weights", o.weights_csv, "comma-separated weights");
    if (wants_m)
        cmd->add_option_function<int>(
               "--m",
               [&o](int v) {
                   o.m = v;
                   o.m_given = true;
               },
               "Hilbert-point degree");
    cmd->add_flag("--pretty", o.pretty, "aligned text instead of JSON");
    cmd->add_option("--config", o.config_path, "JSON config (resource limits etc.)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gitstab: Groebner-based stability workbench for bicanonical genus-3 curves"};
    app.require_subcommand(1);

    CommonOpts gb_o, mu_o, verdict_o, limit_o, decomp_o, profile_o, hf_o, jinv_o, repro_o;
    std::string profile_pair, profile_point;
    std::string jinv_a = "0", jinv_b = "0";
    bool jinv_oracle = false;
    std::string repro_out;
    int repro_jobs = 1;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_common(gb, gb_o, true);
    auto* mu = app.add_subcommand("mu", "Hilbert-Mumford index of the m-th Hilbert point");
    add_common(mu, mu_o, true, true);
    auto* vd = app.add_subcommand("verdict", "stability trichotomy from (mu2, mu3)");
    add_common(vd, verdict_o, true);
    auto* lim = app.add_subcommand("limit", "flat limit along a one-parameter subgroup");
    add_common(lim, limit_o, true);
    auto* dec = app.add_subcommand("verify-decomp", "verify a component decomposition");
    add_common(dec, decomp_o);
    auto* prof = app.add_subcommand("profile", "classify how two components meet at a point");
    add_common(prof, profile_o);
    prof->add_option("--pair", profile_pair, "two catalog components, comma separated");
    prof->add_option("--point", profile_point, "comma-separated point coordinates");
    auto* hf = app.add_subcommand("hf", "Hilbert function value");
    add_common(hf, hf_o, false, true);
    auto* ji = app.add_subcommand("jinv", "j-invariant of the (a,b) genus-one model");
    ji->add_option("--a", jinv_a, "parameter a");
    ji->add_option("--b", jinv_b, "parameter b");
    ji->add_option("--problem", jinv_o.problem_path, "JSON file with \"a\" and \"b\"");
    ji->add_flag("--oracle", jinv_oracle, "use the branch-point cross-ratio oracle");
    ji->add_flag("--pretty", jinv_o.pretty, "aligned text");
    auto* rep = app.add_subcommand("repro", "re-run the whole catalog and emit the report");
    rep->add_option("--config", repro_o.config_path, "JSON config");
    rep->add_option("--out", repro_out, "write the report to a file");
    rep->add_option("--jobs", repro_jobs, "concurrent entries");
    rep->add_flag("--pretty", repro_o.pretty, "summary text instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gb->parsed()) {
            Json out = dispatch_ideal(gb_o, [&](auto I, const Problem& p) {
                MonomialOrder ord = p.weights.empty()
                                        ? canonical_order()
                                        : MonomialOrder::weighted_glex_pinned(p.weights);
                auto basis = I.groebner(ord, limits_from_config(gb_o));
                Json j;
                j["order"] = p.weights.empty() ? "glex" : "weighted-glex";
                j["basis"] = basis_to_json(*basis);
                return j;
            });
            emit(out, gb_o.pretty);
        } else if (mu->parsed()) {
            Json out = dispatch_ideal(mu_o, [&](auto I, const Problem& p) {
                if (p.weights.empty()) throw DomainError("mu needs --weights");
                auto r = mu_index(I, OneParameterSubgroup{p.weights}, p.m, limits_from_config(mu_o));
                return mu_report_to_json(I, r);
            });
            emit(out, mu_o.pretty);
        } else if (vd->parsed()) {
            Json out = dispatch_ideal(verdict_o, [&](auto I, const Problem& p) {
                if (p.weights.empty()) throw DomainError("verdict needs --weights");
                return verdict_to_json(
                    verdict(I, OneParameterSubgroup{p.weights}, true, limits_from_config(verdict_o)));
            });
            emit(out, verdict_o.pretty);
        } else if (lim->parsed()) {
            Json out = dispatch_ideal(limit_o, [&](auto I, const Problem& p) {
                if (p.weights.empty()) throw DomainError("limit needs --weights");
                auto L = flat_limit(I, DegenerationSpec{p.weights}, limits_from_config(limit_o));
                auto canon = L.groebner(canonical_order(), limits_from_config(limit_o));
                Json j;
                j["limit"] = basis_to_json(*canon);
                return j;
            });
            emit(out, limit_o.pretty);
        } else if (dec->parsed()) {
            Json out;
            if (!decomp_o.curve.empty()) {
                auto ctx = context_for(decomp_o);
                DecompositionClaim<Rational> claim;
                if (decomp_o.curve == "conjoined-snowmen")
                    claim = {catalog::conjoined_snowmen(ctx), catalog::snowmen_primes(ctx), {}};
                else if (decomp_o.curve == "i-star")
                    claim = {catalog::i_star(ctx), catalog::i_star_primes(ctx), {}};
                else if (decomp_o.curve == "c-flat")
                    claim = {catalog::c_flat(ctx), catalog::c_flat_primes(ctx), {}};
                else
                    throw DomainError("no canonical decomposition for '" + decomp_o.curve + "'");
                auto v = verify_decomposition(claim, ctx.cfg);
                out = Json{{"verified", v.verified}, {"diagnostic", v.diagnostic}};
            } else {
                if (decomp_o.problem_path.empty()) throw DomainError("need --curve or --problem");
                Problem p = parse_problem(load_json(decomp_o.problem_path));
                auto realize_q = [&](const std::vector<std::string>& texts) {
                    if (p.ring->params.empty())
                        return parse_ideal_texts<Rational>(p.ring, texts);
                    return specialize_ideal(parse_ideal_texts<RatFun>(p.ring, texts), p.assignment);
                };
                DecompositionClaim<Rational> claim;
                claim.ideal = realize_q(p.ideal_texts);
                for (const auto& comp : p.component_texts)
                    claim.components.push_back(realize_q(comp));
                auto v = verify_decomposition(claim, limits_from_config(decomp_o));
                out = Json{{"verified", v.verified}, {"diagnostic", v.diagnostic}};
            }
            emit(out, decomp_o.pretty);
        } else if (prof->parsed()) {
            Json out;
            auto cfg = limits_from_config(profile_o);
            if (!profile_pair.empty()) {
                auto comma = profile_pair.find(',');
                if (comma == std::string::npos) throw DomainError("--pair needs two names");
                auto ctx = context_for(profile_o);
                Ideal<Rational> P = component_by_name(ctx, profile_pair.substr(0, comma));
                Ideal<Rational> Q = component_by_name(ctx, profile_pair.substr(comma + 1));
                if (profile_point.empty()) {
                    bool dis = projectively_disjoint(P, Q, cfg);
                    out = Json{{"classification", dis ? "disjoint" : "meets"}};
                } else {
                    std::vector<std::string> coords;
                    std::string cur;
                    for (char c : profile_point + ",") {
                        if (c == ',') {
                            coords.push_back(cur);
                            cur.clear();
                        } else
                            cur += c;
                    }
                    out = profile_to_json(intersection_profile(P, Q, ctx.point(coords), cfg));
                }
            } else {
                if (profile_o.problem_path.empty()) throw DomainError("need --pair or --problem");
                Problem p = parse_problem(load_json(profile_o.problem_path));
                Ideal<Rational> P = parse_ideal_texts<Rational>(p.ring, p.ideal_texts);
                Ideal<Rational> Q = parse_ideal_texts<Rational>(p.ring, p.ideal2_texts);
                if (p.point_texts.empty()) {
                    bool dis = projectively_disjoint(P, Q, cfg);
                    out = Json{{"classification", dis ? "disjoint" : "meets"}};
                } else {
                    std::vector<Rational> c;
                    for (const auto& t : p.point_texts) c.push_back(Rational::from_string(t));
                    out = profile_to_json(
                        intersection_profile(P, Q, ProjectivePoint<Rational>::of(c), cfg));
                }
            }
            emit(out, profile_o.pretty);
        } else if (hf->parsed()) {
            Json out = dispatch_ideal(hf_o, [&](auto I, const Problem& p) {
                Json j;
                j["m"] = p.m;
                j["hf"] = hilbert_function(I, p.m, limits_from_config(hf_o));
                return j;
            });
            emit(out, hf_o.pretty);
        } else if (ji->parsed()) {
            if (!jinv_o.problem_path.empty()) {
                Json pj = load_json(jinv_o.problem_path);
                if (pj.contains("a")) jinv_a = pj["a"].get<std::string>();
                if (pj.contains("b")) jinv_b = pj["b"].get<std::string>();
            }
            Rational a = Rational::from_string(jinv_a), b = Rational::from_string(jinv_b);
            Rational j = jinv_oracle ? j_invariant_oracle(a, b) : j_invariant(a, b);
            emit(Json{{"a", a.str()}, {"b", b.str()}, {"j", j.str()},
                      {"method", jinv_oracle ? "branch-point-oracle" : "closed-form"}},
                 jinv_o.pretty);
        } else if (rep->parsed()) {
            repro::ReproConfig cfg;
            if (!repro_o.config_path.empty()) cfg = repro::config_from_json(load_json(repro_o.config_path));
            cfg.jobs = repro_jobs;
            auto report = repro::run_repro(cfg);
            Json j = report.to_json(cfg);
            if (!repro_out.empty()) {
                std::ofstream outf(repro_out);
                outf << j.dump(2) << "\n";
            }
            if (repro_o.pretty) {
                for (const auto& e : report.entries)
                    std::cout << (e.match ? "  ok  " : " FAIL ") << e.id << "\n";
                std::cout << report.matched << " matched, " << report.mismatched << " mismatched\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            return report.clean() ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
