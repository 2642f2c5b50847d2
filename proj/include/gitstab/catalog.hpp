#ifndef GITSTAB_CATALOG_HPP
#define GITSTAB_CATALOG_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gitstab/geometry.hpp"
#include "gitstab/jinv.hpp"
#include "gitstab/parser.hpp"

namespace gitstab::catalog {

// ---------------------------------------------------------------------------
// Parameters. Defaults keep every specialized curve inside its valid range:
// beta outside {0,1}, ell outside {0,1}, gamma nonzero.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names = {"beta", "a", "b", "a2", "b2", "ell", "gamma"};
    return names;
}

inline std::map<std::string, Rational> default_assignment() {
    return {{"beta", Rational(2)}, {"a", Rational(0)},   {"b", Rational(0)}, {"a2", Rational(0)},
            {"b2", Rational(0)},   {"ell", Rational(2)}, {"gamma", Rational(1)}};
}

/// All rings and parameter bindings a catalog build needs, for one choice of
/// coefficient field (Q with a concrete assignment, or Q(params)).
template <class K>
struct Context {
    RingPtr p5, p3, plane, st;
    std::map<std::string, K> bind;
    GroebnerConfig cfg;

    const K& val(const std::string& name) const {
        auto it = bind.find(name);
        if (it == bind.end()) throw DomainError("unknown catalog parameter '" + name + "'");
        return it->second;
    }

    Polynomial<K> poly(const RingPtr& ring, const std::string& text) const {
        return parse_polynomial<K>(text, ring, bind);
    }
    Ideal<K> ideal(const RingPtr& ring, const std::vector<std::string>& texts) const {
        std::vector<Polynomial<K>> gens;
        gens.reserve(texts.size());
        for (const auto& t : texts) gens.push_back(poly(ring, t));
        return Ideal<K>(ring, std::move(gens));
    }
    K scalar(const std::string& text) const {
        Polynomial<K> p = poly(p5, text);
        if (!p.is_constant()) throw DomainError("expected a scalar: " + text);
        return p.constant_value();
    }
    ProjectivePoint<K> point(const std::vector<std::string>& coords) const {
        std::vector<K> c;
        c.reserve(coords.size());
        for (const auto& t : coords) c.push_back(scalar(t));
        return ProjectivePoint<K>::of(std::move(c));
    }
};

inline void check_parameter_ranges(const std::map<std::string, Rational>& a) {
    auto bad = [](const std::string& n, const Rational& v) {
        throw DomainError("parameter " + n + " = " + v.str() + " is out of range");
    };
    const Rational& beta = a.at("beta");
    if (beta.is_zero() || beta.is_one()) bad("beta", beta);
    const Rational& ell = a.at("ell");
    if (ell.is_zero() || ell.is_one()) bad("ell", ell);
    if (a.at("gamma").is_zero()) bad("gamma", a.at("gamma"));
}

inline Context<Rational> specialized_context(std::map<std::string, Rational> assignment = {},
                                             GroebnerConfig cfg = default_groebner_config()) {
    auto full = default_assignment();
    for (auto& [k, v] : assignment) {
        if (full.find(k) == full.end()) throw DomainError("unknown parameter '" + k + "'");
        full[k] = v;
    }
    check_parameter_ranges(full);
    Context<Rational> ctx;
    ctx.p5 = make_xring(6);
    ctx.p3 = make_xring(4);
    ctx.plane = make_xring(3);
    ctx.st = make_ring({"s", "t"});
    for (auto& [k, v] : full) ctx.bind.emplace(k, v);
    ctx.cfg = cfg;
    return ctx;
}

inline Context<RatFun> symbolic_context(GroebnerConfig cfg = default_groebner_config()) {
    Context<RatFun> ctx;
    const auto& ps = parameter_names();
    ctx.p5 = make_xring(6, ps);
    ctx.p3 = make_xring(4, ps);
    ctx.plane = make_xring(3, ps);
    ctx.st = make_ring({"s", "t"}, ps);
    RingPtr pring = make_ring(ps);
    for (std::size_t i = 0; i < ps.size(); ++i)
        ctx.bind.emplace(ps[i], RatFun::parameter(pring, static_cast<int>(i)));
    ctx.cfg = cfg;
    return ctx;
}

// ---------------------------------------------------------------------------
// Transcribed generators.
// ---------------------------------------------------------------------------

/// Conjoined snowmen: two snowmen meeting in two nodes. The x3*x5 term of the
/// third generator is the corrected reading; see displayed_snowmen_generators.
inline const std::vector<std::string>& snowmen_generators() {
    static const std::vector<std::string> g = {
        "x1*x5", "x0*x5", "x4^2 + x2*x5 + x3*x5", "x1*x4", "x0*x4", "x2*x3",
        "x1^2 + x0*x2 + x0*x3"};
    return g;
}

/// The source display (third generator printed with x4*x5); kept for the
/// erratum entry that demonstrates it is not the flat limit and not the
/// intersection of the displayed conic primes.
inline const std::vector<std::string>& displayed_snowmen_generators() {
    static const std::vector<std::string> g = {
        "x1*x5", "x0*x5", "x4^2 + x2*x5 + x4*x5", "x1*x4", "x0*x4", "x2*x3",
        "x1^2 + x0*x2 + x0*x3"};
    return g;
}

inline const std::vector<std::vector<std::string>>& snowmen_prime_generators() {
    static const std::vector<std::vector<std::string>> g = {
        {"x2", "x1", "x0", "x4^2 + x3*x5"},
        {"x3", "x1", "x0", "x4^2 + x2*x5"},
        {"x5", "x4", "x3", "x1^2 + x0*x2"},
        {"x5", "x4", "x2", "x1^2 + x0*x3"}};
    return g;
}

inline const std::vector<std::string>& bridge_e1_generators() {
    static const std::vector<std::string> g = {
        "x4", "x5", "x0*x1 - x2*x3", "x1^2 + x0*x3 + x0*x2 + a*x0*x1 + b*x0^2"};
    return g;
}
inline const std::vector<std::string>& bridge_e2_generators() {
    static const std::vector<std::string> g = {
        "x0", "x1", "x5*x4 - x3*x2", "x4^2 + x5*x2 + x5*x3 + a2*x5*x4 + b2*x5^2"};
    return g;
}

inline const std::string& cat_eye_quartic_text() {
    static const std::string t = "(x1^2 + x0*x2)*(beta*x1^2 + x0*x2)";
    return t;
}
inline const std::string& ox_quartic_text() {
    static const std::string t = "x0*x2*(x0*x2 - x1^2)";
    return t;
}
inline const std::vector<std::string>& ox_p5_generators() {
    static const std::vector<std::string> g = {
        "x4^2 - x3*x5", "x3*x4 - x0*x5", "x1*x4 - x3*x5", "x2*x3 - x4*x5",
        "x1*x2 - x5^2", "x0*x2 - x3*x5", "x0*x1 - x3^2"};
    return g;
}

inline const std::vector<std::string>& c_flat_generators() {
    static const std::vector<std::string> g = {
        "x3*x5",
        "x0*x5",
        "x2*x3",
        "x1*x2 - x5^2",
        "x0*x2",
        "x0*x1 - x3^2",
        "x1*x5^2*beta + x4*x5^2*beta + x2*x4^2 + x4*x5^2",
        "x2*x4*x5^2*beta + x5^4*beta + x2^2*x4^2 + x2*x4*x5^2",
        "x1^2*x5*beta + x1*x4*x5*beta + x1*x4*x5 + x4^2*x5",
        "x3^2*a^2*beta + 2*x0*x3*a*b*beta + x0^2*b^2*beta + 2*x1*x3*a*beta + x3*x4*a*beta"
        " + 2*x3^2*b*beta + x0*x4*b*beta + x0*x3*beta^2 + x3*x4*a + x0*x4*b + x1^2*beta"
        " - 2*x0*x3*beta + x1*x4*beta + x0*x3 + x1*x4 + x4^2"};
    return g;
}

/// Components of the intermediate limit: two conics and an elliptic quartic.
inline const std::vector<std::vector<std::string>>& c_flat_prime_generators() {
    static const std::vector<std::vector<std::string>> g = {
        {"x3", "x0", "x1 + x4", "x2*x4 + x5^2"},
        {"x3", "x0", "x1*beta + x4", "x1*x2 - x5^2", "x5^2*beta + x2*x4"},
        {"x5", "x2", "x0*x1 - x3^2",
         "x0^2*b^2*beta + 2*x0*x3*b*beta*a + x3^2*beta*a^2 + 2*x3^2*b*beta + x0*x4*b*beta"
         " + x0*x3*beta^2 + 2*x1*x3*beta*a + x3*x4*beta*a + x0*x4*b + x1^2*beta - 2*x0*x3*beta"
         " + x1*x4*beta + x3*x4*a + x0*x3 + x1*x4 + x4^2",
         "x0*x3^2*b^2*beta + 2*x3^3*b*beta*a + x1*x3^2*beta*a^2 + 2*x1*x3^2*b*beta"
         " + x3^2*x4*b*beta + x3^3*beta^2 + 2*x1^2*x3*beta*a + x1*x3*x4*beta*a + x3^2*x4*b"
         " + x1^3*beta - 2*x3^3*beta + x1^2*x4*beta + x1*x3*x4*a + x3^3 + x1^2*x4 + x1*x4^2",
         "x3^4*b^2*beta + 2*x1*x3^3*b*beta*a + x1^2*x3^2*beta*a^2 + 2*x1^2*x3^2*b*beta"
         " + x1*x3^2*x4*b*beta + x1*x3^3*beta^2 + 2*x1^3*x3*beta*a + x1^2*x3*x4*beta*a"
         " + x1*x3^2*x4*b + x1^4*beta - 2*x1*x3^3*beta + x1^3*x4*beta + x1^2*x3*x4*a"
         " + x1*x3^3 + x1^3*x4 + x1^2*x4^2"}};
    return g;
}

inline const std::vector<std::string>& i_star_generators() {
    static const std::vector<std::string> g = {
        "x3*x5",
        "x0*x5",
        "x2*x3",
        "x1*x2 - x5^2",
        "x0*x2",
        "x0*x1 - x3^2",
        "x1^2*beta + x1*x4*beta + x1*x4 + x4^2",
        "x1*x5^2*beta + x4*x5^2*beta + x2*x4^2 + x4*x5^2",
        "x1*x3^2*beta + x3^2*x4*beta + x3^2*x4 + x0*x4^2",
        "x2*x4*x5^2*beta + x5^4*beta + x2^2*x4^2 + x2*x4*x5^2",
        "x3^4*beta + x0*x3^2*x4*beta + x0*x3^2*x4 + x0^2*x4^2"};
    return g;
}

inline const std::vector<std::vector<std::string>>& i_star_prime_generators() {
    static const std::vector<std::vector<std::string>> g = {
        {"x5", "x2", "x1 + x4", "x3^2 + x0*x4"},                             // H1
        {"x5", "x2", "x1*beta + x4", "x0*x1 - x3^2", "x3^2*beta + x0*x4"},   // B1
        {"x3", "x0", "x1 + x4", "x2*x4 + x5^2"},                             // H2
        {"x3", "x0", "x1*beta + x4", "x1*x2 - x5^2", "x5^2*beta + x2*x4"}};  // B2
    return g;
}

inline const std::vector<std::string>& elliptic_p3_generators() {
    static const std::vector<std::string> g = {
        "x0*x1 - x2*x3", "x1^2 + x0*x3 + x0*x2 + a*x0*x1 + b*x0^2"};
    return g;
}

inline const std::string& f_prime_text() {
    static const std::string t = "x0*(x1^2*x2 - x0*(x0 - x2)*(x0 - ell*x2))";
    return t;
}
inline const std::string& d_e_type_text() {
    static const std::string t = "(x1^2 + x0*x2)*(beta*x1^2 + x0*x2 + gamma*x2^2)";
    return t;
}
inline const std::string& d_j_type_text() {
    static const std::string t = "x0*x2*(x0*x2 + x1^2 + gamma*x2^2)";
    return t;
}
inline const std::string& ox_limit_target_text() {
    static const std::string t = "x0*x2*(x0*x2*ell - x1^2)";
    return t;
}
inline const std::string& j_limit_target_text() {
    static const std::string t = "x0*x2*(x0*x2 + x1^2)";
    return t;
}

/// The quartic image of the genus-one P^3 curve under the gluing projection,
/// as displayed at the source; the pipeline result must reproduce it.
inline const std::string& projected_quartic_display_text() {
    static const std::string t =
        "x0^2*x1^2*a^2*beta + 2*x0^3*x1*a*b*beta + x0^4*b^2*beta + 2*x0*x1^3*a*beta"
        " + x0^2*x1*x2*a*beta + 2*x0^2*x1^2*b*beta + x0^3*x2*b*beta + x0^3*x1*beta^2"
        " + x0^2*x1*x2*a + x0^3*x2*b - 2*x0^3*x1*beta + x1^4*beta + x0*x1^2*x2*beta"
        " + x0^3*x1 + x0*x1^2*x2 + x0^2*x2^2";
    return t;
}

/// Reduced-basis rows of the cat-eye bicanonical ideal as displayed at the
/// source (display term order is not leading-term order; rows are compared by
/// recomputing each row's leading monomial under the pinned order).
inline const std::vector<std::string>& cat_eye_basis_rows() {
    static const std::vector<std::string> g = {
        "x1*x2 - x5^2",
        "x2*x3 - x4*x5",
        "x1*x4 - x3*x5",
        "x0*x2 - x4^2",
        "x1^2*beta + x3*x5*beta + x3*x5 + x4^2",
        "x1*x5^2*beta + x4*x5^2*beta + x2*x4^2 + x4*x5^2",
        "x2*x4*x5^2*beta + x5^4*beta + x2^2*x4^2 + x2*x4*x5^2",
        "x0*x5 - x3*x4",
        "x1*x3*x5*beta + x3*x4*x5*beta + x3*x4*x5 + x4^3",
        "x3*x5^3*beta + x4^2*x5^2*beta + x2*x4^3 + x4^2*x5^2",
        "x0*x1 - x3^2",
        "x3^2*x5^2*beta + x3*x4^2*x5*beta + x3*x4^2*x5 + x4^4",
        "x3^3*x5*beta + x3^2*x4^2*beta + x0*x4^3 + x3^2*x4^2",
        "x0*x3^2*x4*beta + x3^4*beta + x0^2*x4^2 + x0*x3^2*x4",
        "x1*x3^2*beta + x3^2*x4*beta + x0*x4^2 + x3^2*x4"};
    return g;
}

// Displayed degree-2 and degree-3 standard-monomial lists.
struct GoldenList {
    std::string curve;
    int m;
    std::vector<std::string> monomials;
};

inline const std::vector<GoldenList>& golden_lists() {
    static const std::vector<GoldenList> g = {
        {"conjoined-snowmen", 2,
         {"x0^2", "x0*x2", "x0*x3", "x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x2^2", "x2*x4",
          "x3^2", "x3*x5", "x4^2", "x5^2"}},
        {"conjoined-snowmen", 3,
         {"x0^3", "x0^2*x2", "x0^2*x3", "x0*x2^2", "x0*x3^2", "x1^3", "x1^2*x2", "x1^2*x3",
          "x1*x2^2", "x1*x2*x4", "x1*x3^2", "x1*x3*x5", "x1*x4^2", "x1*x5^2", "x2^3", "x2^2*x4",
          "x2*x4^2", "x3^3", "x3^2*x5", "x3*x5^2", "x4^3", "x5^3"}},
        {"cat-eye", 2,
         {"x0^2", "x0*x3", "x0*x4", "x1*x3", "x1*x5", "x2^2", "x2*x4", "x2*x5", "x3^2", "x3*x4",
          "x3*x5", "x4^2", "x4*x5", "x5^2"}},
        {"cat-eye", 3,
         {"x0^3", "x0^2*x3", "x0^2*x4", "x0*x3^2", "x0*x3*x4", "x0*x4^2", "x2^3", "x2^2*x4",
          "x2^2*x5", "x2*x4^2", "x2*x4*x5", "x2*x5^2", "x3^3", "x3^2*x4", "x3^2*x5", "x3*x4^2",
          "x3*x4*x5", "x3*x5^2", "x4^3", "x4^2*x5", "x4*x5^2", "x5^3"}},
        {"ox", 2,
         {"x0^2", "x0*x3", "x0*x4", "x1^2", "x1*x3", "x1*x5", "x2^2", "x2*x4", "x2*x5", "x3^2",
          "x3*x4", "x4^2", "x4*x5", "x5^2"}},
        {"ox", 3,
         {"x0^3", "x0^2*x3", "x0^2*x4", "x0*x3^2", "x0*x3*x4", "x1^3", "x1^2*x3", "x1^2*x5",
          "x1*x3^2", "x1*x5^2", "x2^3", "x2^2*x4", "x2^2*x5", "x2*x4*x5", "x2*x5^2", "x3^3",
          "x3^2*x4", "x3*x4^2", "x4^3", "x4^2*x5", "x4*x5^2", "x5^3"}},
        {"c-flat", 2,
         {"x0^2", "x0*x3", "x0*x4", "x1*x3", "x1*x4", "x1*x5", "x2^2", "x2*x4", "x2*x5", "x3^2",
          "x3*x4", "x4^2", "x4*x5", "x5^2"}},
        {"c-flat", 3,
         {"x0^3", "x0^2*x3", "x0^2*x4", "x0*x3^2", "x0*x3*x4", "x1*x3^2", "x1*x3*x4", "x1*x4^2",
          "x1*x4*x5", "x2^3", "x2^2*x4", "x2^2*x5", "x2*x4^2", "x2*x4*x5", "x2*x5^2", "x3^3",
          "x3^2*x4", "x3*x4^2", "x4^3", "x4^2*x5", "x4*x5^2", "x5^3"}}};
    return g;
}

// Conic parametrizations (binary quadrics in s, t), one per certified conic.
inline const std::map<std::string, std::vector<std::string>>& conic_parametrizations() {
    static const std::map<std::string, std::vector<std::string>> g = {
        {"snowmen-P1", {"0", "0", "0", "s^2", "s*t", "-t^2"}},
        {"snowmen-P2", {"0", "0", "s^2", "0", "s*t", "-t^2"}},
        {"snowmen-P3", {"s^2", "s*t", "-t^2", "0", "0", "0"}},
        {"snowmen-P4", {"s^2", "s*t", "0", "-t^2", "0", "0"}},
        {"i-star-H1", {"s^2", "t^2", "0", "s*t", "-t^2", "0"}},
        {"i-star-B1", {"s^2", "t^2", "0", "s*t", "-beta*t^2", "0"}},
        {"i-star-H2", {"0", "s^2", "t^2", "0", "-s^2", "s*t"}},
        {"i-star-B2", {"0", "s^2", "t^2", "0", "-beta*s^2", "s*t"}},
        {"c-flat-C1", {"0", "s^2", "t^2", "0", "-s^2", "s*t"}},
        {"c-flat-C2", {"0", "s^2", "t^2", "0", "-beta*s^2", "s*t"}}};
    return g;
}

// One-parameter subgroups and degeneration weights used by the computations.
inline std::vector<long> rho_snowmen() { return {0, 1, 2, 2, 1, 0}; }
inline std::vector<long> rho_cat_eye() { return {4, 2, 0, 3, 2, 1}; }
inline std::vector<long> rho_ox() { return {0, 2, 4, 1, 2, 3}; }
inline std::vector<long> rho_two() { return {0, 2, 2, 1, 2, 2}; }
inline std::vector<long> rho_one() { return {0, 0, 2, 0, 0, 1}; }
inline std::vector<long> plane_rho_up() { return {0, 1, 2}; }    // tacnodal/ox pipelines
inline std::vector<long> plane_rho_down() { return {2, 1, 0}; }  // e-type / j-type basins

/// Coordinate permutation realizing the projective equivalence of the weight
/// vectors (0,2,4,1,2,3) and (4,2,0,3,2,1): the plane swap x0 <-> x2 lifted
/// through the degree-2 monomial basis, i.e. (x0 x2)(x3 x5).
inline std::vector<int> veronese_swap_permutation() { return {2, 1, 0, 5, 4, 3}; }

// ---------------------------------------------------------------------------
// Builders.
// ---------------------------------------------------------------------------

template <class K>
Ideal<K> conjoined_snowmen(const Context<K>& ctx) {
    return ctx.ideal(ctx.p5, snowmen_generators());
}

template <class K>
std::vector<Ideal<K>> snowmen_primes(const Context<K>& ctx) {
    std::vector<Ideal<K>> out;
    for (const auto& g : snowmen_prime_generators()) out.push_back(ctx.ideal(ctx.p5, g));
    return out;
}

template <class K>
std::vector<Ideal<K>> bridge_components(const Context<K>& ctx) {
    return {ctx.ideal(ctx.p5, bridge_e1_generators()), ctx.ideal(ctx.p5, bridge_e2_generators())};
}

template <class K>
Ideal<K> elliptic_bridge(const Context<K>& ctx) {
    auto comps = bridge_components(ctx);
    return intersect(comps[0], comps[1], ctx.cfg);
}

template <class K>
Ideal<K> cat_eye_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, cat_eye_quartic_text())});
}

template <class K>
Ideal<K> cat_eye_p5(const Context<K>& ctx) {
    return veronese2(cat_eye_plane(ctx), ctx.p5, ctx.cfg);
}

template <class K>
Ideal<K> ox_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, ox_quartic_text())});
}

template <class K>
Ideal<K> ox_p5(const Context<K>& ctx) {
    return ctx.ideal(ctx.p5, ox_p5_generators());
}

template <class K>
Ideal<K> c_flat(const Context<K>& ctx) {
    return ctx.ideal(ctx.p5, c_flat_generators());
}

template <class K>
std::vector<Ideal<K>> c_flat_primes(const Context<K>& ctx) {
    std::vector<Ideal<K>> out;
    for (const auto& g : c_flat_prime_generators()) out.push_back(ctx.ideal(ctx.p5, g));
    return out;
}

template <class K>
Ideal<K> i_star(const Context<K>& ctx) {
    return ctx.ideal(ctx.p5, i_star_generators());
}

template <class K>
std::vector<Ideal<K>> i_star_primes(const Context<K>& ctx) {
    std::vector<Ideal<K>> out;
    for (const auto& g : i_star_prime_generators()) out.push_back(ctx.ideal(ctx.p5, g));
    return out;
}

template <class K>
Ideal<K> elliptic_p3(const Context<K>& ctx) {
    return ctx.ideal(ctx.p3, elliptic_p3_generators());
}

/// Identify the two marked points of the P^3 genus-one curve: the image of
/// [x0,x1,x2,x3] under [x0, x1, x2 + beta*x3].
template <class K>
Ideal<K> tacnodal_quartic(const Context<K>& ctx) {
    std::vector<Polynomial<K>> forms = {
        Polynomial<K>::variable(ctx.p3, 0), Polynomial<K>::variable(ctx.p3, 1),
        Polynomial<K>::variable(ctx.p3, 2) + Polynomial<K>::variable(ctx.p3, 3) * ctx.val("beta")};
    return linear_projection(elliptic_p3(ctx), forms, ctx.plane, ctx.cfg);
}

template <class K>
Ideal<K> e_beta_tacnodal(const Context<K>& ctx) {
    return veronese2(tacnodal_quartic(ctx), ctx.p5, ctx.cfg);
}

template <class K>
Ideal<K> f_prime_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, f_prime_text())});
}
template <class K>
Ideal<K> d_e_type_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, d_e_type_text())});
}
template <class K>
Ideal<K> d_j_type_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, d_j_type_text())});
}
template <class K>
Ideal<K> ox_limit_target_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, ox_limit_target_text())});
}
template <class K>
Ideal<K> j_limit_target_plane(const Context<K>& ctx) {
    return Ideal<K>(ctx.plane, {ctx.poly(ctx.plane, j_limit_target_text())});
}

// Marked intersection points.
template <class K>
ProjectivePoint<K> pt(const Context<K>& ctx, const std::vector<std::string>& coords) {
    return ctx.point(coords);
}

// Valuation table of the coordinate functions at the two marked points of the
// P^3 genus-one curve.
struct ValuationRow {
    std::vector<std::string> point;
    std::vector<long> orders;  // of x0..x3
};
inline const std::vector<ValuationRow>& valuation_table() {
    static const std::vector<ValuationRow> t = {
        {{"0", "0", "1", "0"}, {2, 1, 0, 3}},
        {{"0", "0", "0", "1"}, {2, 1, 3, 0}}};
    return t;
}

// ---------------------------------------------------------------------------
// Record metadata for the CLI and the report.
// ---------------------------------------------------------------------------

struct CurveRecord {
    std::string name;
    int ambient;  // projective dimension
    std::vector<std::string> params;
    std::string citation;  // short unique source tag
};

inline const std::vector<CurveRecord>& records() {
    static const std::vector<CurveRecord> rs = {
        {"conjoined-snowmen", 5, {}, "flat-limit display, conjoined snowmen"},
        {"elliptic-bridge", 5, {"a", "b", "a2", "b2"}, "elliptic bridge, two |2p+2q| components"},
        {"cat-eye", 5, {"beta"}, "bicanonical cat-eye via second Veronese"},
        {"cat-eye-plane", 2, {"beta"}, "plane cat-eye quartic"},
        {"ox", 5, {}, "bicanonical ox, seven quadrics"},
        {"ox-plane", 2, {}, "plane ox quartic"},
        {"c-flat", 5, {"beta", "a", "b"}, "intermediate limit of the tacnodal curve"},
        {"i-star", 5, {"beta"}, "second-step limit with four associated primes"},
        {"e-beta-tacnodal", 5, {"beta", "a", "b"}, "bicanonical irreducible tacnodal curve"},
        {"tacnodal-quartic", 2, {"beta", "a", "b"}, "projected tacnodal plane quartic"},
        {"f-prime", 2, {"ell"}, "elliptic-plus-rational quartic model"},
        {"d-e-type", 2, {"beta", "gamma"}, "cat-eye basin member with cross-ratio term"},
        {"d-j-type", 2, {"gamma"}, "ox basin member with extra quadric term"}};
    return rs;
}

inline const CurveRecord& record(const std::string& name) {
    for (const auto& r : records())
        if (r.name == name) return r;
    throw DomainError("unknown catalog curve '" + name + "'");
}

/// Expected Hilbert function: 8m-2 for the bicanonical curves, the plane
/// quartic profile for ambient 2.
inline long expected_hf(const CurveRecord& r, int m) {
    if (r.ambient == 5) return 8L * m - 2;
    long all = (m + 2L) * (m + 1L) / 2;
    long cut = m >= 4 ? (m - 2L) * (m - 3L) / 2 : 0;
    return all - cut;
}

template <class K>
Ideal<K> realize(const std::string& name, const Context<K>& ctx) {
    if (name == "conjoined-snowmen") return conjoined_snowmen(ctx);
    if (name == "elliptic-bridge") return elliptic_bridge(ctx);
    if (name == "cat-eye") return cat_eye_p5(ctx);
    if (name == "cat-eye-plane") return cat_eye_plane(ctx);
    if (name == "ox") return ox_p5(ctx);
    if (name == "ox-plane") return ox_plane(ctx);
    if (name == "c-flat") return c_flat(ctx);
    if (name == "i-star") return i_star(ctx);
    if (name == "e-beta-tacnodal") return e_beta_tacnodal(ctx);
    if (name == "tacnodal-quartic") return tacnodal_quartic(ctx);
    if (name == "f-prime") return f_prime_plane(ctx);
    if (name == "d-e-type") return d_e_type_plane(ctx);
    if (name == "d-j-type") return d_j_type_plane(ctx);
    throw DomainError("unknown catalog curve '" + name + "'");
}

} // namespace gitstab::catalog

#endif
