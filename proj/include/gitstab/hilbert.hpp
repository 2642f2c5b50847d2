#ifndef GITSTAB_HILBERT_HPP
#define GITSTAB_HILBERT_HPP

#include <vector>

#include "gitstab/ideal.hpp"

namespace gitstab {

/// All degree-m monomials in nvars variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int m) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(nvars);
    auto rec = [&](auto&& self, std::size_t var, int left) -> void {
        if (var + 1 == nvars) {
            cur.e[var] = left;
            out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur.e[var] = k;
            self(self, var + 1, left - k);
        }
        cur.e[var] = 0;
    };
    if (nvars == 0) {
        if (m == 0) out.push_back(Monomial::one(0));
        return out;
    }
    rec(rec, 0, m);
    return out;
}

/// Degree-m monomials outside the initial ideal, with their weight sum under
/// the order's weight vector (zero vector for unweighted orders).
struct StandardMonomialSet {
    int m = 0;
    std::vector<Monomial> monomials;  // descending under the defining order
    long weight_sum = 0;
};

template <class K>
StandardMonomialSet standard_monomials(const Ideal<K>& I, const MonomialOrder& ord, int m,
                                       const GroebnerConfig& cfg = default_groebner_config()) {
    if (m < 1) throw DomainError("standard monomials need m >= 1");
    if (!ord.is_graded()) throw DomainError("standard monomials need a graded order");
    auto gb = I.groebner(ord, cfg);

    StandardMonomialSet out;
    out.m = m;
    for (auto& mono : monomials_of_degree(I.ring()->nvars(), m)) {
        bool in_initial = false;
        for (const auto& lm : gb->lms)
            if (lm.divides(mono)) {
                in_initial = true;
                break;
            }
        if (!in_initial) out.monomials.push_back(std::move(mono));
    }
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    if (ord.kind == OrderKind::WeightedGLex)
        for (const auto& mono : out.monomials) out.weight_sum += mono.weight(ord.weights);
    return out;
}

/// HF(I, m) = number of standard monomials; order-independent across graded
/// orders, computed with the canonical one.
template <class K>
long hilbert_function(const Ideal<K>& I, int m,
                      const GroebnerConfig& cfg = default_groebner_config()) {
    if (m < 1) throw DomainError("hilbert function needs m >= 1");
    return static_cast<long>(standard_monomials(I, canonical_order(), m, cfg).monomials.size());
}

// ---------------------------------------------------------------------------
// Independent Hilbert-function oracle: Macaulay matrix rank, no Groebner
// machinery. Used to cross-check standard-monomial counting.
// ---------------------------------------------------------------------------

template <class K>
std::size_t matrix_rank(std::vector<std::vector<K>> a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        K inv = a[rank][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            K f = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// HF via dim(S_m) - rank of the degree-m slice spanned by generator
/// multiples; requires homogeneous generators.
template <class K>
long macaulay_hilbert_function(const Ideal<K>& I, int m) {
    if (m < 1) throw DomainError("hilbert function needs m >= 1");
    std::size_t n = I.ring()->nvars();
    auto basis = monomials_of_degree(n, m);
    std::unordered_map<Monomial, std::size_t, Monomial::Hash> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);

    std::vector<std::vector<K>> rows;
    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        auto d = g.homogeneous_degree();
        if (!d) throw DomainError("macaulay oracle needs homogeneous generators");
        if (*d > m) continue;
        for (const auto& u : monomials_of_degree(n, m - *d)) {
            std::vector<K> row(basis.size(), K(0));
            for (const auto& [mono, c] : g.terms()) row[col.at(mono * u)] = c;
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long>(basis.size()) - static_cast<long>(matrix_rank(std::move(rows)));
}

} // namespace gitstab

#endif
