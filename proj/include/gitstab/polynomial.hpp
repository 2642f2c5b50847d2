#ifndef GITSTAB_POLYNOMIAL_HPP
#define GITSTAB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gitstab/errors.hpp"
#include "gitstab/monomial.hpp"
#include "gitstab/order.hpp"
#include "gitstab/rational.hpp"
#include "gitstab/ring.hpp"

namespace gitstab {

inline const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::glex();
    return ord;
}

// Coefficient printing hooks; RatFun overloads these in ratfun.hpp.
inline bool coeff_sign_negative(const Rational& c) { return c.sgn() < 0; }
inline Rational coeff_negate(const Rational& c) { return -c; }
inline bool coeff_is_plain_one(const Rational& c) { return c.is_one(); }
inline std::string coeff_factor_str(const Rational& c) {
    if (c.sgn() < 0) return "(" + c.str() + ")";
    return c.str();
}

/// Sparse multivariate polynomial over an exact field K.
/// Terms are kept sorted descending under the canonical graded-lex order of
/// the ring, with no zero coefficients: the representation is unique.
/// Values are immutable in spirit — every operation returns a fresh value.
template <class K>
class Polynomial {
  public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(ring->nvars()), std::move(c));
        return p;
    }

    static Polynomial variable(RingPtr ring, int i) {
        if (i < 0 || static_cast<std::size_t>(i) >= ring->nvars())
            throw DomainError("variable index out of range");
        Monomial m = Monomial::one(ring->nvars());
        m.e[static_cast<std::size_t>(i)] = 1;
        return from_monomial(ring, m, K(1));
    }

    static Polynomial from_monomial(RingPtr ring, Monomial m, K c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    static Polynomial from_terms(RingPtr ring, std::vector<Term> ts) {
        std::unordered_map<Monomial, K, Monomial::Hash> acc;
        for (auto& [m, c] : ts) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
        Polynomial p(ring);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
        p.sort_terms();
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    K constant_value() const {
        if (terms_.empty()) return K(0);
        return terms_[0].second;
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.front().first.degree();  // canonical order is graded
    }

    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.front().first.degree();
        for (const auto& t : terms_)
            if (t.first.degree() != d) return std::nullopt;
        return d;
    }

    /// Leading term under an arbitrary runtime order (linear scan).
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        const Term* best = &terms_[0];
        for (const auto& t : terms_)
            if (ord.compare(t.first, best->first) > 0) best = &t;
        return *best;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Polynomial& o) const {
        check_same_ring(ring_, o.ring_);
        std::unordered_map<Monomial, K, Monomial::Hash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma * mb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), ca * cb);
                else
                    it->second += ca * cb;
            }
        Polynomial r(ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }

    Polynomial operator*(const K& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, a] : terms_) r.terms_.emplace_back(m, a * c);
        return r;
    }

    Polynomial mul_term(const Monomial& m, const K& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, a] : terms_) r.terms_.emplace_back(mm * m, a * c);
        return r;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw DomainError("negative polynomial power");
        Polynomial r = constant(ring_, K(1));
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Ring map determined by variable images (all over one target ring).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->nvars()) throw DomainError("substitution image count mismatch");
        RingPtr target = images.empty() ? ring_ : images[0].ring();
        for (const auto& im : images) check_same_ring(target, im.ring());
        Polynomial r = zero(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(target, c);
            for (std::size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] > 0) t = t * images[i].pow(m.e[i]);
            r = r + t;
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ring_->nvars()) throw DomainError("evaluation point length mismatch");
        K r(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= point[i];
            r += t;
        }
        return r;
    }

    Polynomial derivative(int var) const {
        auto v = static_cast<std::size_t>(var);
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[v] == 0) continue;
            Monomial n = m;
            n.e[v] -= 1;
            r.terms_.emplace_back(std::move(n), c * K(m.e[v]));
        }
        r.sort_terms();
        return r;
    }

    template <class K2, class Fn>
    Polynomial<K2> map_coefficients(RingPtr target, Fn&& fn) const {
        std::vector<typename Polynomial<K2>::Term> ts;
        ts.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            K2 c2 = fn(c);
            if (!c2.is_zero()) ts.emplace_back(m, std::move(c2));
        }
        return Polynomial<K2>::from_terms(std::move(target), std::move(ts));
    }

    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_ && (!ring_ || !o.ring_ || *ring_ != *o.ring_)) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form: terms descending in the ring's graded-lex order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            K cc = c;
            if (first) {
                if (coeff_sign_negative(c)) {
                    os << "-";
                    cc = coeff_negate(c);
                }
            } else {
                if (coeff_sign_negative(c)) {
                    os << " - ";
                    cc = coeff_negate(c);
                } else {
                    os << " + ";
                }
            }
            first = false;
            bool mono_trivial = m.is_one();
            if (mono_trivial) {
                os << coeff_factor_str(cc);
                continue;
            }
            bool wrote = false;
            if (!coeff_is_plain_one(cc)) {
                os << coeff_factor_str(cc);
                wrote = true;
            }
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                if (wrote) os << "*";
                os << ring_->vars[i];
                if (m.e[i] > 1) os << "^" << m.e[i];
                wrote = true;
            }
        }
        return os.str();
    }

  private:
    Polynomial merged(const Polynomial& o, bool subtract) const {
        check_same_ring(ring_, o.ring_);
        const MonomialOrder& ord = canonical_order();
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size()) {
                const auto& [m, c] = o.terms_[j++];
                r.terms_.emplace_back(m, subtract ? -c : c);
            } else {
                int cmp = ord.compare(terms_[i].first, o.terms_[j].first);
                if (cmp > 0) {
                    r.terms_.push_back(terms_[i++]);
                } else if (cmp < 0) {
                    const auto& [m, c] = o.terms_[j++];
                    r.terms_.emplace_back(m, subtract ? -c : c);
                } else {
                    K c = subtract ? terms_[i].second - o.terms_[j].second
                                   : terms_[i].second + o.terms_[j].second;
                    if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c));
                    ++i;
                    ++j;
                }
            }
        }
        return r;
    }

    void sort_terms() {
        const MonomialOrder& ord = canonical_order();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

template <class K>
Polynomial<K> operator*(const K& c, const Polynomial<K>& p) {
    return p * c;
}

/// Exact quotient a / b; throws DomainError when b does not divide a.
template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (b.is_zero()) throw DomainError("exact division by zero polynomial");
    const MonomialOrder& ord = canonical_order();
    Polynomial<K> rem = a;
    Polynomial<K> quot = Polynomial<K>::zero(a.ring());
    const auto ltb = b.leading_term(ord);
    while (!rem.is_zero()) {
        const auto lta = rem.leading_term(ord);
        if (!ltb.first.divides(lta.first)) throw DomainError("inexact polynomial division");
        Monomial m = lta.first / ltb.first;
        K c = lta.second / ltb.second;
        quot = quot + Polynomial<K>::from_monomial(a.ring(), m, c);
        rem = rem - b.mul_term(m, c);
    }
    return quot;
}

} // namespace gitstab

#endif
