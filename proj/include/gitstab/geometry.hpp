#ifndef GITSTAB_GEOMETRY_HPP
#define GITSTAB_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gitstab/hilbert.hpp"
#include "gitstab/stability.hpp"

namespace gitstab {

template <class K>
struct ProjectivePoint {
    std::vector<K> coords;  // canonical: first nonzero coordinate is 1

    static ProjectivePoint of(std::vector<K> c) {
        std::size_t k = c.size();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) {
                k = i;
                break;
            }
        if (k == c.size()) throw DomainError("projective point needs a nonzero coordinate");
        K inv = c[k].inv();
        for (auto& x : c) x *= inv;
        ProjectivePoint p;
        p.coords = std::move(c);
        return p;
    }

    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].str();
        }
        return s + "]";
    }
};

template <class K>
bool lies_on(const Ideal<K>& I, const ProjectivePoint<K>& pt) {
    for (const auto& g : I.gens())
        if (!g.evaluate(pt.coords).is_zero()) return false;
    return true;
}

template <class K>
std::vector<std::vector<K>> jacobian_at(const Ideal<K>& I, const ProjectivePoint<K>& pt) {
    std::vector<std::vector<K>> rows;
    std::size_t n = I.ring()->nvars();
    for (const auto& g : I.gens()) {
        std::vector<K> row(n, K(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = g.derivative(static_cast<int>(j)).evaluate(pt.coords);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Basis of the right kernel of a matrix (reduced row echelon form route).
template <class K>
std::vector<std::vector<K>> kernel_basis(std::vector<std::vector<K>> a, std::size_t cols) {
    std::size_t rows = a.size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        K inv = a[rank][c].inv();
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            K f = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<K>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<K> v(cols, K(0));
        v[c] = K(1);
        for (std::size_t d = 0; d < cols; ++d)
            if (pivot_of_col[d] >= 0) v[d] = -a[static_cast<std::size_t>(pivot_of_col[d])][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
bool same_span(const std::vector<std::vector<K>>& u, const std::vector<std::vector<K>>& v) {
    std::vector<std::vector<K>> all = u;
    all.insert(all.end(), v.begin(), v.end());
    return matrix_rank(u) == matrix_rank(all) && matrix_rank(v) == matrix_rank(all);
}

/// Substitution images of an invertible coordinate change taking the vertex
/// e0 to `pt` (so the moved ideal has the point of interest at e0).
template <class K>
std::vector<Polynomial<K>> vertex_to_point_images(const RingPtr& ring, const ProjectivePoint<K>& pt) {
    std::size_t n = ring->nvars();
    std::size_t k = 0;
    while (k < n && pt.coords[k].is_zero()) ++k;
    std::vector<Polynomial<K>> images(n, Polynomial<K>::zero(ring));
    // x_i -> pt[i]*y0 + y_{slot(i)}, where the pivot coordinate k maps to pt[k]*y0
    std::size_t next = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial<K> im = Polynomial<K>::variable(ring, 0) * pt.coords[i];
        if (i != k) {
            im = im + Polynomial<K>::variable(ring, static_cast<int>(next));
            ++next;
        }
        images[i] = im;
    }
    return images;
}

template <class K>
Ideal<K> translate_point_to_vertex(const Ideal<K>& I, const ProjectivePoint<K>& pt) {
    auto images = vertex_to_point_images(I.ring(), pt);
    std::vector<Polynomial<K>> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.substitute(images));
    return Ideal<K>(I.ring(), std::move(gens));
}

/// (J : (x_{i} : i in vars)^infty) as the intersection of the single-variable
/// saturations.
template <class K>
Ideal<K> saturate_by_variables(const Ideal<K>& J, const std::vector<int>& vars,
                               const GroebnerConfig& cfg = default_groebner_config()) {
    std::optional<Ideal<K>> acc;
    for (int v : vars) {
        Ideal<K> s = saturate(J, Polynomial<K>::variable(J.ring(), v), cfg);
        acc = acc ? intersect(*acc, s, cfg) : s;
    }
    if (!acc) throw DomainError("saturation by an empty variable set");
    return *acc;
}

inline std::vector<int> variable_indices(std::size_t n, std::size_t from = 0) {
    std::vector<int> v;
    for (std::size_t i = from; i < n; ++i) v.push_back(static_cast<int>(i));
    return v;
}

/// Degree (= eventual Hilbert function) of a zero-dimensional saturated
/// projective scheme; 0 for the empty scheme.
template <class K>
long stable_scheme_degree(const Ideal<K>& sat, const GroebnerConfig& cfg = default_groebner_config()) {
    long prev = hilbert_function(sat, 1, cfg);
    for (int m = 2; m < 64; ++m) {
        long cur = hilbert_function(sat, m, cfg);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw ResourceLimitError("Hilbert function did not stabilize; scheme is not zero-dimensional");
}

/// Length of the local ring of V(J) at `pt` (0 when the point is not on the
/// scheme): degree of the whole finite scheme minus the degree of the part
/// saturated away from the point.
template <class K>
long local_intersection_length(const Ideal<K>& J, const ProjectivePoint<K>& pt,
                               const GroebnerConfig& cfg = default_groebner_config()) {
    Ideal<K> moved = translate_point_to_vertex(J, pt);
    std::size_t n = moved.ring()->nvars();
    Ideal<K> whole = saturate_by_variables(moved, variable_indices(n), cfg);
    long total = stable_scheme_degree(whole, cfg);
    if (total == 0) return 0;
    Ideal<K> away = saturate_by_variables(moved, variable_indices(n, 1), cfg);
    long off_point = stable_scheme_degree(away, cfg);
    return total - off_point;
}

/// True when V(P + Q) has no projective point.
template <class K>
bool projectively_disjoint(const Ideal<K>& P, const Ideal<K>& Q,
                           const GroebnerConfig& cfg = default_groebner_config()) {
    check_same_ring(P.ring(), Q.ring());
    std::vector<Polynomial<K>> gens = P.gens();
    gens.insert(gens.end(), Q.gens().begin(), Q.gens().end());
    Ideal<K> J(P.ring(), std::move(gens));
    Ideal<K> sat = saturate_by_variables(J, variable_indices(P.ring()->nvars()), cfg);
    return stable_scheme_degree(sat, cfg) == 0;
}

enum class ContactType { Node, Tacnode, Disjoint, Other };

inline const char* to_string(ContactType t) {
    switch (t) {
        case ContactType::Node: return "node";
        case ContactType::Tacnode: return "tacnode";
        case ContactType::Disjoint: return "disjoint";
        case ContactType::Other: return "other";
    }
    return "?";
}

template <class K>
struct IntersectionProfile {
    ProjectivePoint<K> point;
    long local_multiplicity = 0;
    bool tangents_coincide = false;
    ContactType classification = ContactType::Other;
    std::string diagnostic;
};

/// Classify how two one-dimensional components meet at a point. Both must be
/// smooth there (Jacobian corank 2 in the ambient cone); a transversal length
/// one meeting is a node, a simple tangency of length two is a tacnode.
template <class K>
IntersectionProfile<K> intersection_profile(const Ideal<K>& P, const Ideal<K>& Q,
                                            const ProjectivePoint<K>& pt,
                                            const GroebnerConfig& cfg = default_groebner_config()) {
    check_same_ring(P.ring(), Q.ring());
    IntersectionProfile<K> out;
    out.point = pt;
    if (!lies_on(P, pt) || !lies_on(Q, pt))
        throw DomainError("point does not lie on both components");

    std::size_t n = P.ring()->nvars();
    auto jp = jacobian_at(P, pt);
    auto jq = jacobian_at(Q, pt);
    if (matrix_rank(jp) != n - 2 || matrix_rank(jq) != n - 2) {
        out.classification = ContactType::Other;
        out.diagnostic = "a branch is singular at the point";
        return out;
    }
    auto kp = kernel_basis(jp, n);
    auto kq = kernel_basis(jq, n);
    out.tangents_coincide = same_span(kp, kq);

    std::vector<Polynomial<K>> gens = P.gens();
    gens.insert(gens.end(), Q.gens().begin(), Q.gens().end());
    Ideal<K> J(P.ring(), std::move(gens));
    out.local_multiplicity = local_intersection_length(J, pt, cfg);

    if (out.local_multiplicity == 0) {
        out.classification = ContactType::Other;
        out.diagnostic = "components do not meet at the point";
    } else if (out.local_multiplicity == 1 && !out.tangents_coincide) {
        out.classification = ContactType::Node;
    } else if (out.local_multiplicity == 2 && out.tangents_coincide) {
        out.classification = ContactType::Tacnode;
    } else {
        out.classification = ContactType::Other;
        out.diagnostic = "length " + std::to_string(out.local_multiplicity) +
                         (out.tangents_coincide ? " with tangency" : " transversal");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maps: implicitization by elimination.
// ---------------------------------------------------------------------------

/// Image ideal of V(I) under the polynomial map given by `images` (in the
/// source ring), landing in `target`. Kernel of K[target] -> K[src]/I.
template <class K>
Ideal<K> map_image(const Ideal<K>& I, const std::vector<Polynomial<K>>& images,
                   const RingPtr& target, const GroebnerConfig& cfg = default_groebner_config()) {
    const RingPtr& S = I.ring();
    if (images.size() != target->nvars()) throw DomainError("image count does not match target ring");
    std::vector<std::string> evars;
    for (const auto& v : S->vars) evars.push_back("@src:" + v);
    for (const auto& v : target->vars) evars.push_back(v);
    RingPtr ER = make_ring(evars, S->params);

    std::vector<int> src_up(S->nvars());
    for (std::size_t i = 0; i < S->nvars(); ++i) src_up[i] = static_cast<int>(i);

    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(reindex(g, ER, src_up));
    for (std::size_t j = 0; j < images.size(); ++j) {
        check_same_ring(S, images[j].ring());
        Polynomial<K> zj = Polynomial<K>::variable(ER, static_cast<int>(S->nvars() + j));
        gens.push_back(zj - reindex(images[j], ER, src_up));
    }
    Ideal<K> big(ER, std::move(gens));

    std::vector<int> kill;
    for (std::size_t i = 0; i < S->nvars(); ++i) kill.push_back(static_cast<int>(i));
    Ideal<K> elim = eliminate(big, kill, cfg);

    std::vector<int> id(target->nvars());
    for (std::size_t i = 0; i < target->nvars(); ++i) id[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> out;
    for (const auto& g : elim.gens()) out.push_back(reindex(g, target, id));
    return Ideal<K>(target, std::move(out));
}

/// Degree-2 monomial basis in the source variables, squares first then
/// products in lexicographic pair order: for the plane this is
/// (x0^2, x1^2, x2^2, x0x1, x0x2, x1x2).
template <class K>
std::vector<Polynomial<K>> veronese2_monomials(const RingPtr& src) {
    std::vector<Polynomial<K>> ms;
    std::size_t n = src->nvars();
    for (std::size_t i = 0; i < n; ++i)
        ms.push_back(Polynomial<K>::variable(src, static_cast<int>(i)) *
                     Polynomial<K>::variable(src, static_cast<int>(i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            ms.push_back(Polynomial<K>::variable(src, static_cast<int>(i)) *
                         Polynomial<K>::variable(src, static_cast<int>(j)));
    return ms;
}

/// Second Veronese image: HF_image(m) = HF_source(2m).
template <class K>
Ideal<K> veronese2(const Ideal<K>& I, const RingPtr& target,
                   const GroebnerConfig& cfg = default_groebner_config()) {
    std::size_t n = I.ring()->nvars();
    if (n > 4) throw DomainError("second Veronese supported for source dimension <= 3");
    auto ms = veronese2_monomials<K>(I.ring());
    if (ms.size() != target->nvars()) throw DomainError("target ring has wrong dimension for veronese2");
    return map_image(I, ms, target, cfg);
}

/// Image under a linear projection; errors when the image drops below
/// dimension one (the Hilbert function of a curve image keeps growing).
template <class K>
Ideal<K> linear_projection(const Ideal<K>& I, const std::vector<Polynomial<K>>& forms,
                           const RingPtr& target,
                           const GroebnerConfig& cfg = default_groebner_config()) {
    for (const auto& f : forms)
        if (f.is_zero() || f.total_degree() != 1)
            throw DomainError("projection needs linear forms");
    Ideal<K> img = map_image(I, forms, target, cfg);
    if (hilbert_function(img, 4, cfg) <= hilbert_function(img, 3, cfg))
        throw DomainError("projection image degenerates to dimension < 1");
    return img;
}

/// Closure of the image of P^1 under a tuple of binary forms (implicitization
/// of a rational parametrization).
template <class K>
Ideal<K> parametrization_image(const RingPtr& st_ring, const std::vector<Polynomial<K>>& forms,
                               const RingPtr& target,
                               const GroebnerConfig& cfg = default_groebner_config()) {
    Ideal<K> zero(st_ring, {});
    return map_image(zero, forms, target, cfg);
}

// ---------------------------------------------------------------------------
// Decomposition verification.
// ---------------------------------------------------------------------------

template <class K>
struct DecompositionClaim {
    Ideal<K> ideal;
    std::vector<Ideal<K>> components;
    // expected HF values per component: (m, value) pairs; empty = unchecked
    std::vector<std::vector<std::pair<int, long>>> expected_hf;
};

template <class K>
struct VerificationResult {
    bool verified = false;
    std::string diagnostic;
};

template <class K>
VerificationResult<K> verify_decomposition(const DecompositionClaim<K>& claim,
                                           const GroebnerConfig& cfg = default_groebner_config()) {
    VerificationResult<K> out;
    if (claim.components.empty()) {
        out.diagnostic = "no components claimed";
        return out;
    }
    for (std::size_t i = 0; i < claim.components.size(); ++i) {
        for (const auto& g : claim.ideal.gens())
            if (!claim.components[i].contains(g, cfg)) {
                out.diagnostic = "component " + std::to_string(i) + " does not contain: " + g.str();
                return out;
            }
    }
    Ideal<K> cap = claim.components[0];
    for (std::size_t i = 1; i < claim.components.size(); ++i)
        cap = intersect(cap, claim.components[i], cfg);
    if (!cap.equals(claim.ideal, cfg)) {
        out.diagnostic = "intersection of components differs from the ideal";
        return out;
    }
    for (std::size_t i = 0; i < claim.expected_hf.size(); ++i)
        for (auto [m, want] : claim.expected_hf[i]) {
            long got = hilbert_function(claim.components[i], m, cfg);
            if (got != want) {
                out.diagnostic = "component " + std::to_string(i) + " has HF(" + std::to_string(m) +
                                 ") = " + std::to_string(got) + ", expected " + std::to_string(want);
                return out;
            }
        }
    out.verified = true;
    return out;
}

/// Certify a conic component: a degree-2 rational parametrization whose image
/// ideal equals the component (hence irreducible), with HF(m) = 2m+1.
template <class K>
VerificationResult<K> certify_conic(const Ideal<K>& component, const RingPtr& st_ring,
                                    const std::vector<Polynomial<K>>& parametrization,
                                    const GroebnerConfig& cfg = default_groebner_config()) {
    VerificationResult<K> out;
    Ideal<K> img = parametrization_image(st_ring, parametrization, component.ring(), cfg);
    if (!img.equals(component, cfg)) {
        out.diagnostic = "parametrization image differs from the component";
        return out;
    }
    for (int m = 1; m <= 3; ++m) {
        long got = hilbert_function(component, m, cfg);
        if (got != 2 * m + 1) {
            out.diagnostic = "conic HF(" + std::to_string(m) + ") = " + std::to_string(got);
            return out;
        }
    }
    out.verified = true;
    return out;
}

} // namespace gitstab

#endif
