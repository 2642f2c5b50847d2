#ifndef GITSTAB_JSON_IO_HPP
#define GITSTAB_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gitstab/geometry.hpp"
#include "gitstab/parser.hpp"
#include "gitstab/stability.hpp"

namespace gitstab {

using Json = nlohmann::json;

// Problem-file schema:
// {
//   "ring": {"vars": ["x0", ...], "params": ["beta", ...]},
//   "ideal": ["<poly>", ...],
//   "ideal2": [...],              profile only
//   "components": [[...], ...],   verify-decomp only
//   "weights": [0,1,2,2,1,0],
//   "m": 2,
//   "assignment": {"beta": "2"},
//   "point": ["0","1","0","0","-1","0"]
// }
struct Problem {
    RingPtr ring;
    std::vector<std::string> ideal_texts;
    std::vector<std::string> ideal2_texts;
    std::vector<std::vector<std::string>> component_texts;
    std::vector<long> weights;
    int m = 2;
    std::map<std::string, Rational> assignment;
    std::vector<std::string> point_texts;
};

inline Problem parse_problem(const Json& j) {
    Problem p;
    if (!j.contains("ring") || !j["ring"].contains("vars"))
        throw ParseError("problem file needs ring.vars");
    std::vector<std::string> vars = j["ring"]["vars"].get<std::vector<std::string>>();
    std::vector<std::string> params;
    if (j["ring"].contains("params")) params = j["ring"]["params"].get<std::vector<std::string>>();
    p.ring = make_ring(vars, params);
    if (j.contains("ideal")) p.ideal_texts = j["ideal"].get<std::vector<std::string>>();
    if (j.contains("ideal2")) p.ideal2_texts = j["ideal2"].get<std::vector<std::string>>();
    if (j.contains("components"))
        p.component_texts = j["components"].get<std::vector<std::vector<std::string>>>();
    if (j.contains("weights")) p.weights = j["weights"].get<std::vector<long>>();
    if (j.contains("m")) p.m = j["m"].get<int>();
    if (j.contains("assignment"))
        for (auto it = j["assignment"].begin(); it != j["assignment"].end(); ++it)
            p.assignment.emplace(it.key(), Rational::from_string(it.value().get<std::string>()));
    if (j.contains("point")) p.point_texts = j["point"].get<std::vector<std::string>>();
    return p;
}

template <class K>
Ideal<K> parse_ideal_texts(const RingPtr& ring, const std::vector<std::string>& texts,
                           const std::map<std::string, K>& bind = {}) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(texts.size());
    for (const auto& t : texts) gens.push_back(parse_polynomial<K>(t, ring, bind));
    return Ideal<K>(ring, std::move(gens));
}

inline Ideal<Rational> specialize_ideal(const Ideal<RatFun>& I,
                                        const std::map<std::string, Rational>& assignment) {
    std::vector<Polynomial<Rational>> gens;
    RingPtr target = make_ring(I.ring()->vars);
    for (const auto& g : I.gens()) {
        Polynomial<Rational> s = specialize(g, assignment);
        if (!s.is_zero()) gens.push_back(std::move(s));
    }
    return Ideal<Rational>(target, std::move(gens));
}

/// Realize the problem ideal and hand it to a generic callable: over Q when
/// the ring has no parameters or the assignment covers all of them, otherwise
/// over the parameter field.
template <class Fn>
auto with_problem_ideals(const Problem& p, Fn&& fn) {
    if (p.ring->params.empty()) {
        return fn(parse_ideal_texts<Rational>(p.ring, p.ideal_texts), p);
    }
    bool covered = true;
    for (const auto& name : p.ring->params)
        if (!p.assignment.count(name)) covered = false;
    if (covered) {
        Ideal<RatFun> sym = parse_ideal_texts<RatFun>(p.ring, p.ideal_texts);
        return fn(specialize_ideal(sym, p.assignment), p);
    }
    return fn(parse_ideal_texts<RatFun>(p.ring, p.ideal_texts), p);
}

// ---------------------------------------------------------------------------
// Emission. Ideals print as generator-text arrays that re-parse to equal
// ideals; scalars print as exact rational strings.
// ---------------------------------------------------------------------------

template <class K>
Json ideal_to_json(const Ideal<K>& I) {
    Json a = Json::array();
    for (const auto& g : I.gens()) a.push_back(g.str());
    return a;
}

template <class K>
Json basis_to_json(const GroebnerBasis<K>& gb) {
    Json a = Json::array();
    for (const auto& g : gb.elems) a.push_back(g.str());
    return a;
}

template <class K>
Json monomials_to_json(const RingPtr& ring, const std::vector<Monomial>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(Polynomial<K>::from_monomial(ring, m, K(1)).str());
    return a;
}

template <class K>
Json mu_report_to_json(const Ideal<K>& I, const MuReport& r) {
    Json j;
    j["m"] = r.m;
    j["hilbert_value"] = r.hilbert_value;
    j["weight_sum"] = r.weight_sum;
    j["average_term"] = r.average_term;
    j["average_weight"] = r.average_weight.str();
    j["mu"] = r.mu;
    j["standard_monomials"] = monomials_to_json<K>(I.ring(), r.standard_set.monomials);
    return j;
}

inline Json verdict_to_json(const VerdictReport& v) {
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["mu2"] = v.mu2;
    j["mu3"] = v.mu3;
    j["hypothesis_asserted"] = v.hypothesis_asserted;
    return j;
}

template <class K>
Json profile_to_json(const IntersectionProfile<K>& p) {
    Json j;
    j["point"] = p.point.str();
    j["local_multiplicity"] = p.local_multiplicity;
    j["tangents_coincide"] = p.tangents_coincide;
    j["classification"] = to_string(p.classification);
    if (!p.diagnostic.empty()) j["diagnostic"] = p.diagnostic;
    return j;
}

} // namespace gitstab

#endif
