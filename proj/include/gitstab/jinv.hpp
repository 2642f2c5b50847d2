#ifndef GITSTAB_JINV_HPP
#define GITSTAB_JINV_HPP

#include <array>
#include <vector>

#include "gitstab/hilbert.hpp"
#include "gitstab/polynomial.hpp"

namespace gitstab {

// The genus-one curve cut out by
//   x0x1 - x2x3 = x1^2 + x0x3 + x0x2 + a x0x1 + b x0^2 = 0
// is a double cover of a line ramified over the binary quartic
//   (x^2 + a x y)^2 - 4 y^2 (x y + b x^2),
// i.e. (setting y = 1) over x * (x^3 + 2a x^2 + (a^2-4b) x - 4).

inline std::array<Rational, 4> branch_cubic(const Rational& a, const Rational& b) {
    // monic cubic t^3 + 2a t^2 + (a^2 - 4b) t - 4
    return {Rational(1), Rational(2) * a, a * a - Rational(4) * b, Rational(-4)};
}

/// Classical invariants of the branch quartic and the j-invariant they
/// determine: j = 1728 * 4 I^3 / (4 I^3 - J^2).
struct QuarticInvariants {
    Rational I, J;
};

inline QuarticInvariants branch_quartic_invariants(const Rational& a, const Rational& b) {
    // quartic x^4 + 2a x^3 + (a^2-4b) x^2 - 4x
    Rational c4(1), c3 = Rational(2) * a, c2 = a * a - Rational(4) * b, c1(-4), c0(0);
    QuarticInvariants q;
    q.I = Rational(12) * c4 * c0 - Rational(3) * c3 * c1 + c2 * c2;
    q.J = Rational(72) * c4 * c2 * c0 - Rational(27) * c4 * c1 * c1 - Rational(27) * c3 * c3 * c0 +
          Rational(9) * c3 * c2 * c1 - Rational(2) * c2 * c2 * c2;
    return q;
}

/// j-invariant of the (a, b) curve; requires the branch points distinct
/// (discriminant of the quartic nonzero, i.e. 4I^3 != J^2).
inline Rational j_invariant(const Rational& a, const Rational& b) {
    auto [I, J] = branch_quartic_invariants(a, b);
    Rational den = Rational(4) * I * I * I - J * J;
    if (den.is_zero()) throw SingularInputError("singular curve: branch points collide");
    return Rational(1728) * Rational(4) * I * I * I / den;
}

/// Superseded closed form kept only for the regression entry that records its
/// disagreement with the branch-point oracle.
inline Rational j_invariant_printed_form(const Rational& a, const Rational& b) {
    Rational p = a * a - Rational(12) * b;
    Rational num = Rational(-6912) * p * p * p;
    Rational den = Rational(4) * p * p * p +
                   Rational(27) * (Rational(2) * a * a * a - Rational(72) * a * b - Rational(432));
    if (den.is_zero()) throw SingularInputError("printed form undefined here");
    return num / den;
}

// ---------------------------------------------------------------------------
// Independent oracle: adjoin all roots of the branch cubic inside the
// splitting algebra Q[u,v]/(g(u), (g(u)-g(v))/(u-v)), a 6-dimensional
// Q-algebra (a product of fields exactly when the curve is smooth). Form the
// cross ratio lambda of the four branch points {u, v, -2a-u-v, 0} and
// evaluate 256 (lambda^2-lambda+1)^3 / (lambda (1-lambda))^2 there; the
// result must land in Q * 1.
// ---------------------------------------------------------------------------

class SplittingAlgebra {
  public:
    SplittingAlgebra(const Rational& a, const Rational& b)
        : ring_(make_ring({"u", "v"})), a_(a), b_(b) {
        c2_ = Rational(2) * a;
        c1_ = a * a - Rational(4) * b;
        c0_ = Rational(-4);
        basis_.clear();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                Monomial m = Monomial::one(2);
                m.e[0] = i;
                m.e[1] = j;
                basis_.push_back(m);
            }
    }

    using Elem = Polynomial<Rational>;

    Elem root1() const { return Elem::variable(ring_, 0); }
    Elem root2() const { return Elem::variable(ring_, 1); }
    Elem root3() const {
        return -(root1() + root2() + constant(c2_));
    }
    Elem constant(const Rational& c) const { return Elem::constant(ring_, c); }

    Elem mul(const Elem& x, const Elem& y) const { return reduce(x * y); }

    /// Solve z * x = 1 in the algebra; throws SingularInputError on a zero
    /// divisor (collided branch points).
    Elem invert(const Elem& x) const {
        std::vector<std::vector<Rational>> m(6, std::vector<Rational>(7, Rational(0)));
        for (std::size_t j = 0; j < 6; ++j) {
            Elem col = reduce(Elem::from_monomial(ring_, basis_[j], Rational(1)) * x);
            for (const auto& [mono, c] : col.terms()) m[index_of(mono)][j] = c;
        }
        m[0][6] = Rational(1);
        // gaussian solve
        for (std::size_t c = 0; c < 6; ++c) {
            std::size_t piv = c;
            while (piv < 6 && m[piv][c].is_zero()) ++piv;
            if (piv == 6) throw SingularInputError("zero divisor in the splitting algebra");
            std::swap(m[piv], m[c]);
            Rational inv = m[c][c].inv();
            for (std::size_t k = c; k < 7; ++k) m[c][k] *= inv;
            for (std::size_t r = 0; r < 6; ++r) {
                if (r == c || m[r][c].is_zero()) continue;
                Rational f = m[r][c];
                for (std::size_t k = c; k < 7; ++k) m[r][k] -= f * m[c][k];
            }
        }
        std::vector<typename Elem::Term> ts;
        for (std::size_t i = 0; i < 6; ++i)
            if (!m[i][6].is_zero()) ts.emplace_back(basis_[i], m[i][6]);
        return Elem::from_terms(ring_, std::move(ts));
    }

    /// Canonical form: exponents below (3, 2) via the relations g(u) = 0 and
    /// the Cauchy module of g in v.
    Elem reduce(Elem x) const {
        // u^3 = -(c2 u^2 + c1 u + c0)
        // v^2 = -(u^2 + u v + c2 (u + v) + c1)
        for (;;) {
            bool changed = false;
            std::vector<typename Elem::Term> keep;
            Elem delta = Elem::zero(ring_);
            for (const auto& [m, c] : x.terms()) {
                if (m.e[1] >= 2) {
                    Monomial rest = m;
                    rest.e[1] -= 2;
                    Elem repl = -(usq() + uv() + constant(c2_) * (root1() + root2()) + constant(c1_));
                    delta = delta + repl.mul_term(rest, c);
                    changed = true;
                } else if (m.e[0] >= 3) {
                    Monomial rest = m;
                    rest.e[0] -= 3;
                    Elem repl = -(constant(c2_) * usq() + constant(c1_) * root1() + constant(c0_));
                    delta = delta + repl.mul_term(rest, c);
                    changed = true;
                } else {
                    keep.emplace_back(m, c);
                }
            }
            x = Elem::from_terms(ring_, std::move(keep)) + delta;
            if (!changed) return x;
        }
    }

    bool is_scalar(const Elem& x) const { return x.is_constant(); }

  private:
    Elem usq() const { return root1() * root1(); }
    Elem uv() const { return root1() * root2(); }

    std::size_t index_of(const Monomial& m) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == m) return i;
        throw DomainError("monomial outside the splitting-algebra basis");
    }

    RingPtr ring_;
    Rational a_, b_, c2_, c1_, c0_;
    std::vector<Monomial> basis_;
};

/// Branch-point cross-ratio oracle for the j-invariant. Fully exact: the four
/// branch points are 0 and the abstract roots of the cubic living in the
/// splitting algebra; lambda and j are computed there and j must be scalar.
inline Rational j_invariant_oracle(const Rational& a, const Rational& b,
                                   int which_permutation = 0) {
    SplittingAlgebra A(a, b);
    using Elem = SplittingAlgebra::Elem;
    Elem p1 = A.root1(), p2 = A.root2(), p3 = A.root3();
    if (which_permutation == 1) std::swap(p1, p2);
    if (which_permutation == 2) std::swap(p2, p3);
    // lambda = ((p1 - p3) * p2) / ((p2 - p3) * p1), fourth point at 0
    Elem num = A.mul(p1 - p3, p2);
    Elem den = A.mul(p2 - p3, p1);
    Elem lambda = A.mul(num, A.invert(den));
    Elem one = A.constant(Rational(1));
    Elem t = A.mul(lambda, lambda) - lambda + one;
    Elem t3 = A.mul(A.mul(t, t), t);
    Elem d = A.mul(lambda, one - lambda);
    Elem j = A.mul(A.constant(Rational(256)) * t3, A.invert(A.mul(d, d)));
    if (!A.is_scalar(j)) throw DomainError("cross-ratio j-invariant is not scalar");
    return j.constant_value();
}

} // namespace gitstab

#endif
