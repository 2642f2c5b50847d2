#ifndef GITSTAB_GROEBNER_HPP
#define GITSTAB_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gitstab/errors.hpp"
#include "gitstab/polynomial.hpp"

namespace gitstab {

/// Resource guards for basis computations; exceeding any throws
/// ResourceLimitError rather than spinning.
struct GroebnerConfig {
    std::size_t max_pairs = 2000000;
    int max_degree = 64;
    std::size_t max_basis = 20000;
    int saturation_cap = 20;
};

inline const GroebnerConfig& default_groebner_config() {
    static const GroebnerConfig cfg{};
    return cfg;
}

template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial<K>> elems;  // reduced, monic, sorted by leading monomial descending
    std::vector<Monomial> lms;

    const std::vector<Monomial>& leading_monomials() const { return lms; }
};

namespace gb_detail {

template <class K>
using TermMap = std::map<Monomial, K, MonomialLess>;

template <class K>
TermMap<K> to_term_map(const Polynomial<K>& p, const MonomialOrder& ord) {
    TermMap<K> m(MonomialLess{&ord});
    for (const auto& t : p.terms()) m.insert(t);
    return m;
}

template <class K>
Polynomial<K> from_term_map(const RingPtr& ring, const TermMap<K>& m) {
    std::vector<typename Polynomial<K>::Term> ts(m.begin(), m.end());
    return Polynomial<K>::from_terms(ring, std::move(ts));
}

/// work -= c * mono * g
template <class K>
void subtract_multiple(TermMap<K>& work, const K& c, const Monomial& mono, const Polynomial<K>& g) {
    for (const auto& [m, a] : g.terms()) {
        Monomial key = m * mono;
        auto it = work.find(key);
        if (it == work.end()) {
            work.emplace(std::move(key), -(c * a));
        } else {
            it->second -= c * a;
            if (it->second.is_zero()) work.erase(it);
        }
    }
}

} // namespace gb_detail

/// Full normal form: no term of the result is divisible by any LM of `basis`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& ord) {
    if (basis.empty() || p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    for (const auto& g : basis) check_same_ring(ring, g.ring());

    std::vector<Monomial> lms;
    std::vector<K> lcs;
    lms.reserve(basis.size());
    for (const auto& g : basis) {
        auto lt = g.leading_term(ord);
        lms.push_back(lt.first);
        lcs.push_back(lt.second);
    }

    auto work = gb_detail::to_term_map(p, ord);
    gb_detail::TermMap<K> rem(MonomialLess{&ord});
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const Monomial& m = top->first;
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lms[i].divides(m)) continue;
            K c = top->second / lcs[i];
            Monomial q = m / lms[i];
            gb_detail::subtract_multiple(work, c, q, basis[i]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.insert(*top);
            work.erase(top);
        }
    }
    return gb_detail::from_term_map(ring, rem);
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    K lc = p.leading_term(ord).second;
    if (lc.is_one()) return p;
    return p * lc.inv();
}

/// Buchberger with the coprime-leading-term and chain criteria; normal
/// selection strategy (smallest lcm first). Deterministic for fixed input.
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens,
                                      const MonomialOrder& ord,
                                      const GroebnerConfig& cfg = default_groebner_config()) {
    std::vector<Polynomial<K>> basis;
    std::vector<Monomial> lms;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(make_monic(g, ord));
        lms.push_back(basis.back().leading_term(ord).first);
    }
    if (basis.empty()) return basis;

    struct Pair {
        int deg;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = ord.compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(lms[i], lms[j]);
            queue.insert(Pair{l.degree(), std::move(l), i, j});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});
        if (++processed > cfg.max_pairs) throw ResourceLimitError("S-pair budget exceeded");

        // first Buchberger criterion
        if (lms[pr.i].coprime_with(lms[pr.j])) continue;
        // chain criterion: lcm divisible by a third LM whose two pairs are done
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lms[k].divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        const auto& f = basis[pr.i];
        const auto& g = basis[pr.j];
        Monomial mf = pr.lcm / lms[pr.i];
        Monomial mg = pr.lcm / lms[pr.j];
        Polynomial<K> s = f.mul_term(mf, K(1)) - g.mul_term(mg, K(1));
        Polynomial<K> r = normal_form(s, basis, ord);
        if (r.is_zero()) continue;
        if (r.total_degree() > cfg.max_degree)
            throw ResourceLimitError("basis element degree exceeds limit");
        basis.push_back(make_monic(r, ord));
        lms.push_back(basis.back().leading_term(ord).first);
        if (basis.size() > cfg.max_basis) throw ResourceLimitError("basis size exceeds limit");
        push_pairs_for(basis.size() - 1);
    }
    return basis;
}

/// Minimal + tail-reduced + monic + sorted: the unique reduced basis.
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> basis, const MonomialOrder& ord) {
    // minimalize
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(g.leading_term(ord).first);
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[i] != lms[j] || j < i)) {
                keep[i] = false;
                break;
            }
        }
    std::vector<Polynomial<K>> min_basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) min_basis.push_back(basis[i]);

    // tail-reduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < min_basis.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(min_basis.size() - 1);
            for (std::size_t j = 0; j < min_basis.size(); ++j)
                if (j != i) others.push_back(min_basis[j]);
            Polynomial<K> r = normal_form(min_basis[i], others, ord);
            if (r != min_basis[i]) {
                if (r.is_zero()) {
                    min_basis.erase(min_basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    min_basis[i] = make_monic(r, ord);
                }
                changed = true;
            }
        }
    }
    std::sort(min_basis.begin(), min_basis.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.leading_term(ord).first, b.leading_term(ord).first) > 0;
    });
    return min_basis;
}

template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens, const MonomialOrder& ord,
                                const GroebnerConfig& cfg = default_groebner_config()) {
    GroebnerBasis<K> gb;
    gb.order = ord;
    gb.elems = reduce_basis(buchberger(gens, ord, cfg), ord);
    gb.lms.reserve(gb.elems.size());
    for (const auto& g : gb.elems) gb.lms.push_back(g.leading_term(ord).first);
    return gb;
}

} // namespace gitstab

#endif
