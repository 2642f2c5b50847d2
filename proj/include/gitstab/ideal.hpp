#ifndef GITSTAB_IDEAL_HPP
#define GITSTAB_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gitstab/groebner.hpp"
#include "gitstab/polynomial.hpp"

namespace gitstab {

/// Reindex a polynomial into another ring; index_map[i] is the target index
/// of source variable i, or -1 when the variable must not occur.
template <class K>
Polynomial<K> reindex(const Polynomial<K>& p, const RingPtr& target,
                      const std::vector<int>& index_map) {
    std::vector<typename Polynomial<K>::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = Monomial::one(target->nvars());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (index_map[i] < 0)
                throw DomainError("variable '" + p.ring()->vars[i] + "' cannot be eliminated from a term using it");
            mm.e[static_cast<std::size_t>(index_map[i])] = m.e[i];
        }
        ts.emplace_back(std::move(mm), c);
    }
    return Polynomial<K>::from_terms(target, std::move(ts));
}

/// Generator list with a per-order cache of reduced Groebner bases. The cache
/// is shared across copies (completed bases are immutable) and guarded by a
/// mutex for concurrent readers/writers.
template <class K>
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial<K>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens_) check_same_ring(ring_, g.ring());
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }

    std::shared_ptr<const GroebnerBasis<K>> groebner(
        const MonomialOrder& ord, const GroebnerConfig& cfg = default_groebner_config()) const {
        const std::string key = ord.cache_key();
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->bases.find(key);
            if (it != cache_->bases.end()) return it->second;
        }
        auto gb = std::make_shared<GroebnerBasis<K>>(groebner_basis(gens_, ord, cfg));
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, inserted] = cache_->bases.emplace(key, gb);
        return it->second;
    }

    bool contains(const Polynomial<K>& p,
                  const GroebnerConfig& cfg = default_groebner_config()) const {
        auto gb = groebner(canonical_order(), cfg);
        return normal_form(p, gb->elems, canonical_order()).is_zero();
    }

    /// Ideal equality via identical reduced bases under one fixed order.
    bool equals(const Ideal& other, const GroebnerConfig& cfg = default_groebner_config()) const {
        check_same_ring(ring_, other.ring_);
        auto a = groebner(canonical_order(), cfg);
        auto b = other.groebner(canonical_order(), cfg);
        return a->elems == b->elems;
    }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_zero() && !g.homogeneous_degree()) return false;
        return true;
    }

  private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis<K>>> bases;
    };

    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    std::shared_ptr<Cache> cache_;
};

template <class K>
Ideal<K> make_ideal(const RingPtr& ring, std::vector<Polynomial<K>> gens) {
    return Ideal<K>(ring, std::move(gens));
}

/// I ∩ k[vars not listed]: block elimination order, keep the basis elements
/// free of the eliminated variables, reindex into the smaller ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& kill,
                   const GroebnerConfig& cfg = default_groebner_config()) {
    const RingPtr& R = I.ring();
    std::size_t n = R->nvars();
    std::vector<bool> killed(n, false);
    for (int v : kill) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("bad variable index");
        killed[static_cast<std::size_t>(v)] = true;
    }

    // permuted ring: eliminated variables first
    std::vector<std::string> pvars;
    std::vector<int> to_perm(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (killed[i]) {
            to_perm[i] = static_cast<int>(pvars.size());
            pvars.push_back(R->vars[i]);
        }
    int split = static_cast<int>(pvars.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!killed[i]) {
            to_perm[i] = static_cast<int>(pvars.size());
            pvars.push_back(R->vars[i]);
        }
    RingPtr PR = make_ring(pvars, R->params);

    std::vector<Polynomial<K>> pgens;
    pgens.reserve(I.gens().size());
    for (const auto& g : I.gens()) pgens.push_back(reindex(g, PR, to_perm));

    auto gb = buchberger(pgens, MonomialOrder::block(split), cfg);

    // target ring: remaining variables in original declaration order
    std::vector<std::string> rvars;
    std::vector<int> perm_to_target(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (!killed[i]) {
            perm_to_target[static_cast<std::size_t>(to_perm[i])] = static_cast<int>(rvars.size());
            rvars.push_back(R->vars[i]);
        }
    RingPtr TR = make_ring(rvars, R->params);

    std::vector<Polynomial<K>> out;
    for (const auto& g : gb) {
        bool uses_killed = false;
        for (const auto& [m, c] : g.terms())
            for (int i = 0; i < split && !uses_killed; ++i)
                if (m.e[static_cast<std::size_t>(i)] > 0) uses_killed = true;
        if (!uses_killed) out.push_back(reindex(g, TR, perm_to_target));
    }
    return Ideal<K>(TR, std::move(out));
}

/// Intersection via the auxiliary variable: eliminate t from t·I + (1−t)·J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J,
                   const GroebnerConfig& cfg = default_groebner_config()) {
    check_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    std::vector<std::string> evars;
    evars.push_back("t@");
    for (const auto& v : R->vars) evars.push_back(v);
    RingPtr ER = make_ring(evars, R->params);

    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i) + 1;

    Polynomial<K> t = Polynomial<K>::variable(ER, 0);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(ER, K(1)) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(t * reindex(g, ER, up));
    for (const auto& h : J.gens()) gens.push_back(one_minus_t * reindex(h, ER, up));

    Ideal<K> big(ER, std::move(gens));
    Ideal<K> flat = eliminate(big, {0}, cfg);

    // eliminate() preserves names, so the result ring equals R
    std::vector<int> id(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) id[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> out;
    for (const auto& g : flat.gens()) out.push_back(reindex(g, R, id));
    return Ideal<K>(R, std::move(out));
}

/// Colon ideal (I : f) = (I ∩ ⟨f⟩) / f.
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& f,
                  const GroebnerConfig& cfg = default_groebner_config()) {
    check_same_ring(I.ring(), f.ring());
    if (f.is_zero()) throw DomainError("colon by zero");
    Ideal<K> fI(I.ring(), {f});
    Ideal<K> cap = intersect(I, fI, cfg);
    std::vector<Polynomial<K>> out;
    for (const auto& g : cap.gens())
        if (!g.is_zero()) out.push_back(exact_quotient(g, f));
    return Ideal<K>(I.ring(), std::move(out));
}

/// (I : f^∞) by iterated colon until the reduced basis stabilizes; throws
/// after cfg.saturation_cap rounds.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f,
                  const GroebnerConfig& cfg = default_groebner_config()) {
    Ideal<K> cur = I;
    for (int it = 0; it < cfg.saturation_cap; ++it) {
        Ideal<K> next = quotient(cur, f, cfg);
        if (next.equals(cur, cfg)) return cur;
        cur = std::move(next);
    }
    throw ResourceLimitError("saturation did not stabilize within the iteration cap");
}

} // namespace gitstab

#endif
