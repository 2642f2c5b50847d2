#ifndef GITSTAB_RATFUN_HPP
#define GITSTAB_RATFUN_HPP

#include <string>
#include <utility>
#include <vector>

#include "gitstab/errors.hpp"
#include "gitstab/polynomial.hpp"

namespace gitstab {

using PPoly = Polynomial<Rational>;  // polynomial in the parameter symbols

inline PPoly poly_divide_exact(const PPoly& a, const PPoly& b) { return exact_quotient(a, b); }

namespace detail {

inline int deg_in(const PPoly& f, std::size_t v) {
    int d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.e[v]);
    return d;
}

/// Coefficient of v^k, as a polynomial in the same ring with v-exponent 0.
inline PPoly coeff_of(const PPoly& f, std::size_t v, int k) {
    std::vector<PPoly::Term> ts;
    for (const auto& [m, c] : f.terms())
        if (m.e[v] == k) {
            Monomial mm = m;
            mm.e[v] = 0;
            ts.emplace_back(std::move(mm), c);
        }
    return PPoly::from_terms(f.ring(), std::move(ts));
}

inline int max_used_var(const PPoly& f) {
    int best = -1;
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) best = std::max(best, static_cast<int>(i));
    return best;
}

PPoly poly_gcd(const PPoly& a, const PPoly& b);

inline PPoly content_in(const PPoly& f, std::size_t v) {
    PPoly g = PPoly::zero(f.ring());
    for (int k = 0; k <= deg_in(f, v); ++k) {
        PPoly c = coeff_of(f, v, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
    }
    return g;
}

/// Pseudo-remainder of f by g with respect to variable v.
inline PPoly prem_in(PPoly f, const PPoly& g, std::size_t v) {
    int dg = deg_in(g, v);
    PPoly lcg = coeff_of(g, v, dg);
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        int df = deg_in(f, v);
        PPoly lcf = coeff_of(f, v, df);
        Monomial shift = Monomial::one(f.ring()->nvars());
        shift.e[v] = df - dg;
        f = f * lcg - g.mul_term(shift, Rational(1)) * lcf;
    }
    return f;
}

inline PPoly make_monic(const PPoly& f) {
    if (f.is_zero()) return f;
    Rational lc = f.leading_term(canonical_order()).second;
    return f * lc.inv();
}

/// GCD in Q[params] by primitive pseudo-remainder sequences, recursing on the
/// highest variable present. Result is monic under the canonical order.
inline PPoly poly_gcd(const PPoly& a, const PPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    int va = max_used_var(a), vb = max_used_var(b);
    if (va < 0 || vb < 0) return PPoly::constant(a.ring(), Rational(1));
    auto v = static_cast<std::size_t>(std::max(va, vb));

    PPoly ca = content_in(a, v), cb = content_in(b, v);
    PPoly cont = poly_gcd(ca, cb);
    PPoly fa = poly_divide_exact(a, ca);
    PPoly fb = poly_divide_exact(b, cb);

    if (deg_in(fa, v) < deg_in(fb, v)) std::swap(fa, fb);
    while (!fb.is_zero()) {
        PPoly r = prem_in(fa, fb, v);
        fa = std::move(fb);
        if (!r.is_zero()) r = poly_divide_exact(r, content_in(r, v));
        fb = std::move(r);
    }
    return make_monic(cont * fa);
}

} // namespace detail

inline PPoly poly_gcd(const PPoly& a, const PPoly& b) { return detail::poly_gcd(a, b); }

inline const RingPtr& empty_param_ring() {
    static const RingPtr r = make_ring({});
    return r;
}

/// Element of the fraction field of Q[params]. Kept reduced after every
/// operation (eager gcd cancellation) with the denominator monic under the
/// canonical order, so equal values have equal representations. Constants can
/// live over the empty parameter ring and are lifted on demand.
class RatFun {
  public:
    RatFun() : RatFun(Rational(0)) {}
    RatFun(long n) : RatFun(Rational(n)) {}
    explicit RatFun(const Rational& c)
        : pring_(empty_param_ring()),
          num_(PPoly::constant(empty_param_ring(), c)),
          den_(PPoly::constant(empty_param_ring(), Rational(1))) {}

    static RatFun parameter(const RingPtr& pring, int i) {
        return RatFun(PPoly::variable(pring, i), PPoly::constant(pring, Rational(1)));
    }
    static RatFun from_poly(PPoly num) {
        RingPtr r = num.ring();
        return RatFun(std::move(num), PPoly::constant(r, Rational(1)));
    }
    RatFun(PPoly num, PPoly den) : pring_(num.ring()), num_(std::move(num)), den_(std::move(den)) {
        check_same_ring(pring_, den_.ring());
        reduce();
    }

    const RingPtr& param_ring() const { return pring_; }
    const PPoly& num() const { return num_; }
    const PPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw DomainError("rational-function value is not constant");
        if (num_.is_zero()) return Rational(0);
        return num_.constant_value() / den_.constant_value();
    }

    RatFun lift_to(const RingPtr& pring) const {
        if (*pring_ == *pring) return *this;
        if (pring_->nvars() != 0) throw RingMismatchError("parameter fields differ");
        auto lift = [&](const PPoly& p) {
            std::vector<PPoly::Term> ts;
            for (const auto& [m, c] : p.terms()) ts.emplace_back(Monomial::one(pring->nvars()), c);
            return PPoly::from_terms(pring, std::move(ts));
        };
        RatFun r;
        r.pring_ = pring;
        r.num_ = lift(num_);
        r.den_ = lift(den_);
        return r;
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFun operator+(const RatFun& o) const {
        auto [a, b] = aligned(*this, o);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-(const RatFun& o) const {
        auto [a, b] = aligned(*this, o);
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator*(const RatFun& o) const {
        auto [a, b] = aligned(*this, o);
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw DomainError("division by zero");
        auto [a, b] = aligned(*this, o);
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return RatFun(den_, num_);
    }

    bool operator==(const RatFun& o) const {
        auto [a, b] = aligned(*this, o);
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Ring homomorphism to Q at a parameter point; the denominator must not
    /// vanish there.
    Rational specialize(const std::vector<Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d.is_zero()) throw SingularInputError("denominator vanishes under the assignment");
        return num_.evaluate(point) / d;
    }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    static std::pair<RatFun, RatFun> aligned(const RatFun& a, const RatFun& b) {
        if (*a.pring_ == *b.pring_) return {a, b};
        if (a.pring_->nvars() == 0) return {a.lift_to(b.pring_), b};
        if (b.pring_->nvars() == 0) return {a, b.lift_to(a.pring_)};
        throw RingMismatchError("parameter fields differ");
    }

    void reduce() {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = PPoly::constant(pring_, Rational(1));
            return;
        }
        PPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divide_exact(num_, g);
            den_ = poly_divide_exact(den_, g);
        }
        Rational lc = den_.leading_term(canonical_order()).second;
        if (!lc.is_one()) {
            num_ = num_ * lc.inv();
            den_ = den_ * lc.inv();
        }
    }

    RingPtr pring_;
    PPoly num_, den_;
};

/// Ring homomorphism Q(params)[vars] -> Q[vars] at a parameter point.
/// Errors when a parameter is unassigned or a denominator vanishes there.
inline Polynomial<Rational> specialize(const Polynomial<RatFun>& p,
                                       const std::map<std::string, Rational>& assignment) {
    RingPtr target = make_ring(p.ring()->vars);
    std::vector<typename Polynomial<Rational>::Term> ts;
    for (const auto& [m, c] : p.terms()) {
        const RingPtr& pring = c.param_ring();
        std::vector<Rational> point;
        point.reserve(pring->nvars());
        for (const auto& name : pring->vars) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw DomainError("unassigned parameter '" + name + "' in specialization");
            point.push_back(it->second);
        }
        Rational v = c.specialize(point);
        if (!v.is_zero()) ts.emplace_back(m, v);
    }
    return Polynomial<Rational>::from_terms(target, std::move(ts));
}

inline bool coeff_sign_negative(const RatFun& c) {
    if (c.is_zero()) return false;
    return c.num().leading_term(canonical_order()).second.sgn() < 0;
}
inline RatFun coeff_negate(const RatFun& c) { return -c; }
inline bool coeff_is_plain_one(const RatFun& c) { return c.is_constant() && c.constant_value().is_one(); }
inline std::string coeff_factor_str(const RatFun& c) {
    if (c.is_constant()) return coeff_factor_str(c.constant_value());
    bool single = c.num().nterms() == 1 &&
                  c.num().leading_term(canonical_order()).second.sgn() > 0;
    if (c.den().is_constant()) return single ? c.num().str() : "(" + c.num().str() + ")";
    std::string num = single ? c.num().str() : "(" + c.num().str() + ")";
    return num + "/(" + c.den().str() + ")";
}

} // namespace gitstab

#endif
