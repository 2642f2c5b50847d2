#ifndef GITSTAB_STABILITY_HPP
#define GITSTAB_STABILITY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gitstab/hilbert.hpp"
#include "gitstab/ideal.hpp"

namespace gitstab {

/// Diagonal one-parameter subgroup x_i -> alpha^{r_i} x_i.
struct OneParameterSubgroup {
    std::vector<long> weights;

    long weight_sum() const {
        long s = 0;
        for (long w : weights) s += w;
        return s;
    }
    /// SL-normalized companion: (N+1) r_i - sum(r); sums to zero.
    std::vector<long> normalized() const {
        long n1 = static_cast<long>(weights.size());
        long s = weight_sum();
        std::vector<long> out(weights.size());
        for (std::size_t i = 0; i < weights.size(); ++i) out[i] = n1 * weights[i] - s;
        return out;
    }
};

/// One Hilbert–Mumford index evaluation:
///   mu = -(N+1) * sum of rho-weights of the degree-m standard monomials
///        + m * P(m) * sum(r)
/// with the standard monomials taken against the rho-weighted graded lex
/// order (pinned tie-break).
struct MuReport {
    int m = 0;
    StandardMonomialSet standard_set;
    long hilbert_value = 0;   // P(m), evaluated as HF(I, m)
    long weight_sum = 0;      // sum of rho-weights over the standard monomials
    long average_term = 0;    // m * P(m) * sum(r)
    Rational average_weight;  // average_term / (N+1)
    long mu = 0;
};

template <class K>
MuReport mu_index(const Ideal<K>& I, const OneParameterSubgroup& rho, int m,
                  const GroebnerConfig& cfg = default_groebner_config()) {
    if (m < 1) throw DomainError("mu index needs m >= 1");
    if (rho.weights.size() != I.ring()->nvars())
        throw DomainError("weight vector length does not match the ambient ring");
    MonomialOrder ord = MonomialOrder::weighted_glex_pinned(rho.weights);
    MuReport rep;
    rep.m = m;
    rep.standard_set = standard_monomials(I, ord, m, cfg);
    rep.hilbert_value = static_cast<long>(rep.standard_set.monomials.size());
    rep.weight_sum = rep.standard_set.weight_sum;
    long n1 = static_cast<long>(I.ring()->nvars());
    rep.average_term = static_cast<long>(m) * rep.hilbert_value * rho.weight_sum();
    rep.average_weight = Rational(rep.average_term, n1);
    rep.mu = -n1 * rep.weight_sum + rep.average_term;
    return rep;
}

enum class Stability { Stable, StrictlySemistable, Unstable, Inconclusive };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::StrictlySemistable: return "strictly-semistable";
        case Stability::Unstable: return "unstable";
        case Stability::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Trichotomy on (mu_2, mu_3). Valid only under the hypothesis that the curve
/// and its rho-limit are both bicanonical c-stable; the caller's assertion of
/// that hypothesis is recorded, and sign patterns outside the three clauses
/// come back Inconclusive rather than guessed.
struct VerdictReport {
    Stability verdict = Stability::Inconclusive;
    long mu2 = 0, mu3 = 0;
    bool hypothesis_asserted = true;
};

inline Stability classify_trichotomy(long mu2, long mu3) {
    if (mu3 >= 2 * mu2 && mu2 > 0) return Stability::Stable;
    if (mu2 == 0 && mu3 == 0) return Stability::StrictlySemistable;
    if (mu3 <= 2 * mu2 && mu2 < 0) return Stability::Unstable;
    return Stability::Inconclusive;
}

template <class K>
VerdictReport verdict(const Ideal<K>& I, const OneParameterSubgroup& rho,
                      bool hypothesis_asserted = true,
                      const GroebnerConfig& cfg = default_groebner_config()) {
    VerdictReport r;
    r.hypothesis_asserted = hypothesis_asserted;
    r.mu2 = mu_index(I, rho, 2, cfg).mu;
    r.mu3 = mu_index(I, rho, 3, cfg).mu;
    r.verdict = classify_trichotomy(r.mu2, r.mu3);
    return r;
}

/// Degeneration along rho: the limit of rho(alpha).X as alpha -> 0, which
/// keeps the maximal-rho-weight initial forms. Computed by homogenizing with
/// the auxiliary variable (substitute x_i -> alpha^{max(r)-r_i} x_i, clear the
/// minimal alpha power per generator), saturating by alpha, and setting
/// alpha = 0. Requires homogeneous generators.
struct DegenerationSpec {
    std::vector<long> weights;
};

template <class K>
Ideal<K> flat_limit(const Ideal<K>& I, const DegenerationSpec& spec,
                    const GroebnerConfig& cfg = default_groebner_config()) {
    const RingPtr& R = I.ring();
    if (spec.weights.size() != R->nvars())
        throw DomainError("weight vector length does not match the ambient ring");
    for (const auto& g : I.gens())
        if (!g.is_zero() && !g.homogeneous_degree())
            throw DomainError("flat limit needs homogeneous generators");

    long wmax = spec.weights.empty() ? 0 : *std::max_element(spec.weights.begin(), spec.weights.end());
    std::vector<long> s(R->nvars());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = wmax - spec.weights[i];

    std::vector<std::string> evars = R->vars;
    evars.push_back("@alpha");
    RingPtr ER = make_ring(evars, R->params);
    std::size_t ai = ER->nvars() - 1;

    std::vector<Polynomial<K>> hgens;
    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        long amin = -1;
        std::vector<std::pair<Monomial, long>> shifted;
        for (const auto& [mono, c] : g.terms()) {
            long apow = 0;
            for (std::size_t i = 0; i < mono.e.size(); ++i) apow += s[i] * mono.e[i];
            shifted.emplace_back(mono, apow);
            amin = amin < 0 ? apow : std::min(amin, apow);
        }
        std::vector<typename Polynomial<K>::Term> ts;
        std::size_t ti = 0;
        for (const auto& [mono, c] : g.terms()) {
            Monomial mm = Monomial::one(ER->nvars());
            for (std::size_t i = 0; i < mono.e.size(); ++i) mm.e[i] = mono.e[i];
            mm.e[ai] = static_cast<int>(shifted[ti++].second - amin);
            ts.emplace_back(std::move(mm), c);
        }
        hgens.push_back(Polynomial<K>::from_terms(ER, std::move(ts)));
    }

    Ideal<K> family(ER, std::move(hgens));
    Ideal<K> sat = saturate(family, Polynomial<K>::variable(ER, static_cast<int>(ai)), cfg);

    std::vector<int> back(ER->nvars(), -1);
    for (std::size_t i = 0; i + 1 < ER->nvars(); ++i) back[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> lims;
    for (const auto& g : sat.gens()) {
        std::vector<typename Polynomial<K>::Term> ts;
        for (const auto& [mono, c] : g.terms())
            if (mono.e[ai] == 0) ts.emplace_back(mono, c);
        Polynomial<K> cut = Polynomial<K>::from_terms(ER, std::move(ts));
        if (!cut.is_zero()) lims.push_back(reindex(cut, R, back));
    }
    return Ideal<K>(R, std::move(lims));
}

/// Optional projective coordinate change for basin comparisons: variable i of
/// the limit is substituted by images[i] before comparing against the target.
template <class K>
struct BasinResult {
    bool attracted = false;
    std::string diagnostic;
    Ideal<K> limit;
};

template <class K>
BasinResult<K> basin_check(const Ideal<K>& I, const DegenerationSpec& spec, const Ideal<K>& target,
                           const std::optional<std::vector<Polynomial<K>>>& coordinate_change = std::nullopt,
                           const GroebnerConfig& cfg = default_groebner_config()) {
    BasinResult<K> out;
    Ideal<K> lim = flat_limit(I, spec, cfg);
    if (coordinate_change) {
        std::vector<Polynomial<K>> mapped;
        for (const auto& g : lim.gens()) mapped.push_back(g.substitute(*coordinate_change));
        lim = Ideal<K>(target.ring(), std::move(mapped));
    }
    out.limit = lim;
    if (lim.equals(target, cfg)) {
        out.attracted = true;
        return out;
    }
    for (const auto& g : target.gens())
        if (!lim.contains(g, cfg)) {
            out.diagnostic = "target generator not in the limit: " + g.str();
            return out;
        }
    auto gb = lim.groebner(canonical_order(), cfg);
    for (const auto& g : gb->elems)
        if (!target.contains(g, cfg)) {
            out.diagnostic = "limit basis element not in the target: " + g.str();
            return out;
        }
    out.diagnostic = "ideals agree by mutual containment but reduced bases differ";
    return out;
}

} // namespace gitstab

#endif
